import pytest


def pytest_addoption(parser):
    parser.addoption(
        "--seed",
        action="store",
        type=int,
        default=20240801,
        help="seed for randomized property tests",
    )


@pytest.fixture(scope="session")
def seed(request):
    return request.config.getoption("--seed")
