import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "suite",
    deadline=None,
    max_examples=25,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")


@pytest.fixture(scope="session")
def toric_code():
    from tvo import FiniteAbelianGroup, quantum_double_abelian

    return quantum_double_abelian(FiniteAbelianGroup((2,)))


@pytest.fixture(scope="session")
def s3_triangulation():
    from tvo import boundary_4_simplex

    return boundary_4_simplex()
