import pytest

import glowkit as gk


@pytest.fixture(scope="session")
def warm_kernels():
    """Compile the walk kernels once so tests time physics, not JIT."""
    cond = gk.PlasmaConditions.from_lab(3000, 2.45, 1.0, 300)
    hemi = gk.ChamberGeometry(shape=gk.Hemisphere(diameter=0.23))
    cyl = gk.ChamberGeometry(shape=gk.Cylinder(radius=0.115, height=0.10))
    gk.walk_electron(gk.ARGON, cond, hemi, seed=0)
    gk.walk_electron(gk.ARGON, cond, cyl, seed=0)
    gk.displacement_regression(gk.ARGON, cond, n_collisions=(2, 4), walks_per_n=100, seed=0)
