import pytest

from ddlift import GF, LiftingContext, build_lifted_design, trivial_design, veronese_variety
from ddlift.witt import witt12_embedding, witt24_embedding


@pytest.fixture(scope="session")
def gf2():
    return GF(2)


@pytest.fixture(scope="session")
def gf3():
    return GF(3)


@pytest.fixture(scope="session")
def w12():
    return witt12_embedding()


@pytest.fixture(scope="session")
def w24():
    return witt24_embedding()


@pytest.fixture(scope="session")
def w12_lift(w12):
    return build_lifted_design(LiftingContext(w12, 1))


@pytest.fixture(scope="session")
def nrc_base(gf3):
    return trivial_design(
        gf3, veronese_variety(gf3, 1, 2), 3, provenance={"generator": "nrc", "q": 3, "t": 3}
    )


@pytest.fixture(scope="session")
def nrc_lift(nrc_base):
    return build_lifted_design(LiftingContext(nrc_base, 1))
