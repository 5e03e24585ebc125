"""Compiled random-walk kernels.

Each walk owns a private PRNG stream: a splitmix64 chain seeded from
(seed, global walk index) initializes one xoshiro256++ state per walk.
Walk w therefore produces the same trajectory no matter how walks are
batched or scheduled across threads, which is what makes swarm output
bit-reproducible under any degree of parallelism.

Free path lengths are exponential with mean ``mfp`` (sampled with a
256-layer ziggurat); scattering is isotropic (Marsaglia disk rejection,
no trig). Both walk domains are convex, so checking segment endpoints
against the boundary is exact.

Terminal codes: 0 = absorbed at wall, 1 = ionized, 2 = collision cap hit.
"""

from __future__ import annotations

import math

import numpy as np
from numba import float64, njit, prange, uint32, uint64

U64_TO_DOUBLE = 1.0 / 9007199254740992.0  # 2^-53
U32_TO_DOUBLE = 1.0 / 4294967296.0        # 2^-32

_ZIG_LAYERS = 256
_ZIG_R = 7.69711747013104972
_ZIG_V = 3.949659822581572e-3


def _build_exp_ziggurat() -> np.ndarray:
    """Layer boundaries x[0..256] for the Marsaglia-Tsang exponential ziggurat."""
    x = np.zeros(_ZIG_LAYERS + 1)
    x[0] = _ZIG_V * math.exp(_ZIG_R)
    x[1] = _ZIG_R
    for i in range(2, _ZIG_LAYERS):
        x[i] = -math.log(_ZIG_V / x[i - 1] + math.exp(-x[i - 1]))
    x[_ZIG_LAYERS] = 0.0
    return x


ZIG_X = _build_exp_ziggurat()

PRNG_ID = "splitmix64-seeded xoshiro256++ (one stream per walk index)"


@njit(uint64(uint64), cache=True, inline="always")
def _splitmix64(x):
    z = x + uint64(0x9E3779B97F4A7C15)
    z = (z ^ (z >> uint64(30))) * uint64(0xBF58476D1CE4E5B9)
    z = (z ^ (z >> uint64(27))) * uint64(0x94D049BB133111EB)
    return z ^ (z >> uint64(31))


@njit(cache=True, inline="always")
def _stream_state(seed, walk_index):
    """Four xoshiro256++ state words for one walk, decorrelated by splitmix64."""
    base = _splitmix64(uint64(seed) ^ (uint64(0xD1B54A32D192ED03) * uint64(walk_index + 1)))
    s0 = _splitmix64(base)
    s1 = _splitmix64(s0)
    s2 = _splitmix64(s1)
    s3 = _splitmix64(s2)
    return s0, s1, s2, s3


@njit(cache=True, inline="always")
def _next_u64(s0, s1, s2, s3):
    res = uint64((uint64(s0 + s3) << uint64(23)) | (uint64(s0 + s3) >> uint64(41))) + s0
    t = s1 << uint64(17)
    s2 ^= s0
    s3 ^= s1
    s1 ^= s2
    s0 ^= s3
    s2 ^= t
    s3 = uint64((s3 << uint64(45)) | (s3 >> uint64(19)))
    return res, s0, s1, s2, s3


@njit(cache=True, inline="always")
def _exp_sample(s0, s1, s2, s3, zig_x):
    """Exponential(1) variate via the ziggurat; rare wedge/tail fallthrough."""
    while True:
        res, s0, s1, s2, s3 = _next_u64(s0, s1, s2, s3)
        i = uint32(res & uint64(0xFF))
        u = float64(res >> uint64(11)) * U64_TO_DOUBLE
        x = u * zig_x[i]
        if x < zig_x[i + 1]:
            return x, s0, s1, s2, s3
        res, s0, s1, s2, s3 = _next_u64(s0, s1, s2, s3)
        u2 = float64(res >> uint64(11)) * U64_TO_DOUBLE
        if i == uint32(0):
            return _ZIG_R - np.log(1.0 - u2), s0, s1, s2, s3
        f_i = np.exp(-zig_x[i])
        f_i1 = np.exp(-zig_x[i + 1])
        if f_i + u2 * (f_i1 - f_i) < np.exp(-x):
            return x, s0, s1, s2, s3


@njit(cache=True, inline="always")
def _isotropic_direction(s0, s1, s2, s3):
    """Uniform direction on the unit sphere (Marsaglia 1972 disk rejection)."""
    while True:
        res, s0, s1, s2, s3 = _next_u64(s0, s1, s2, s3)
        a = 2.0 * (float64(uint32(res >> uint64(32))) * U32_TO_DOUBLE) - 1.0
        b = 2.0 * (float64(uint32(res & uint64(0xFFFFFFFF))) * U32_TO_DOUBLE) - 1.0
        q = a * a + b * b
        if q < 1.0:
            break
    root = np.sqrt(1.0 - q)
    return 2.0 * a * root, 2.0 * b * root, 1.0 - 2.0 * q, s0, s1, s2, s3


@njit(cache=True, parallel=True, fastmath=True)
def walk_swarm_cylinder(
    seed,
    walk_offset,
    n_walks,
    mfp,
    radius,
    half_height,
    start_x,
    start_y,
    start_z,
    ionize_at,
    max_collisions,
    zig_x,
):
    """Swarm of independent walks in a cylinder |z| < half_height, x^2+y^2 < radius^2."""
    terminal = np.empty(n_walks, dtype=np.uint8)
    collisions = np.empty(n_walks, dtype=np.int64)
    final_r2 = np.empty(n_walks, dtype=np.float64)
    r2_wall = radius * radius
    for w in prange(n_walks):
        s0, s1, s2, s3 = _stream_state(seed, walk_offset + w)
        x = start_x
        y = start_y
        z = start_z
        n = 0
        code = np.uint8(2)
        while n < max_collisions:
            step, s0, s1, s2, s3 = _exp_sample(s0, s1, s2, s3, zig_x)
            dx, dy, dz, s0, s1, s2, s3 = _isotropic_direction(s0, s1, s2, s3)
            x += mfp * step * dx
            y += mfp * step * dy
            z += mfp * step * dz
            if x * x + y * y >= r2_wall or z <= -half_height or z >= half_height:
                code = np.uint8(0)
                break
            n += 1
            if n >= ionize_at:
                code = np.uint8(1)
                break
        terminal[w] = code
        collisions[w] = n
        ddx = x - start_x
        ddy = y - start_y
        ddz = z - start_z
        final_r2[w] = ddx * ddx + ddy * ddy + ddz * ddz
    return terminal, collisions, final_r2


@njit(cache=True, parallel=True, fastmath=True)
def walk_swarm_halfball(
    seed,
    walk_offset,
    n_walks,
    mfp,
    radius,
    start_z,
    ionize_at,
    max_collisions,
    zig_x,
):
    """Swarm of walks in a dome: x^2+y^2+z^2 < radius^2 with absorbing plane z = 0.

    Models a bowl of diameter 2*radius inverted onto a flat baseplate;
    both the glass and the plate absorb electrons.
    """
    terminal = np.empty(n_walks, dtype=np.uint8)
    collisions = np.empty(n_walks, dtype=np.int64)
    final_r2 = np.empty(n_walks, dtype=np.float64)
    r2_wall = radius * radius
    for w in prange(n_walks):
        s0, s1, s2, s3 = _stream_state(seed, walk_offset + w)
        x = 0.0
        y = 0.0
        z = start_z
        n = 0
        code = np.uint8(2)
        while n < max_collisions:
            step, s0, s1, s2, s3 = _exp_sample(s0, s1, s2, s3, zig_x)
            dx, dy, dz, s0, s1, s2, s3 = _isotropic_direction(s0, s1, s2, s3)
            x += mfp * step * dx
            y += mfp * step * dy
            z += mfp * step * dz
            if z <= 0.0 or x * x + y * y + z * z >= r2_wall:
                code = np.uint8(0)
                break
            n += 1
            if n >= ionize_at:
                code = np.uint8(1)
                break
        terminal[w] = code
        collisions[w] = n
        ddz = z - start_z
        final_r2[w] = x * x + y * y + ddz * ddz
    return terminal, collisions, final_r2


@njit(cache=True, parallel=True, fastmath=True)
def free_walk_r2(seed, walk_offset, n_walks, mfp, n_steps, zig_x):
    """Squared displacement after exactly n_steps collisions, no boundary."""
    r2 = np.empty(n_walks, dtype=np.float64)
    for w in prange(n_walks):
        s0, s1, s2, s3 = _stream_state(seed, walk_offset + w)
        x = 0.0
        y = 0.0
        z = 0.0
        for _ in range(n_steps):
            step, s0, s1, s2, s3 = _exp_sample(s0, s1, s2, s3, zig_x)
            dx, dy, dz, s0, s1, s2, s3 = _isotropic_direction(s0, s1, s2, s3)
            x += mfp * step * dx
            y += mfp * step * dy
            z += mfp * step * dz
        r2[w] = x * x + y * y + z * z
    return r2
