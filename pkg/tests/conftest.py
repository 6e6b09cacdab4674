import pytest

from poisson_atlas import Exact, LaurentPoly, PoissonPresentation, VarSet
from poisson_atlas.modules import SplitMix
from poisson_atlas.scalars import Scalar


@pytest.fixture
def xyz():
    vs = VarSet(("x", "y", "z"))
    return (vs,) + tuple(LaurentPoly.variable(vs, n) for n in vs.names)


@pytest.fixture
def xyz_laurent():
    vs = VarSet(("x", "y", "z"), laurent=("z",))
    return (vs,) + tuple(LaurentPoly.variable(vs, n) for n in vs.names)


@pytest.fixture
def a1_pres(xyz):
    vs, x, y, z = xyz
    f = z * z - x * y
    return PoissonPresentation(vs, Exact(f), relations=(f,), name="a1")


@pytest.fixture
def torus_pres(xyz):
    vs, x, y, z = xyz
    f = x * y * z - x * x - y * y - z * z + 4
    return PoissonPresentation(vs, Exact(f), relations=(f,), name="torus")


def random_poly(rng: SplitMix, varset, max_terms=4, degree=3):
    """Small random polynomial with integer coefficients in -3..3."""
    terms = {}
    for _ in range(1 + rng.below(max_terms)):
        exps = []
        budget = degree
        for flag in varset.laurent:
            lo = -1 if flag else 0
            e = lo + rng.below(budget - lo + 1)
            exps.append(e)
            budget -= max(e, 0)
        c = rng.below(6) + 1
        c = c - 7 if c > 3 else c
        key = tuple(exps)
        terms[key] = Scalar.coerce(terms.get(key, 0)) + Scalar(c)
    return LaurentPoly(varset, terms)
