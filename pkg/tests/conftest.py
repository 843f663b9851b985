import pytest

from dwell.potential import EvenPolynomialPotential

MODEL1 = EvenPolynomialPotential(2, (1.0, -2.0, -2.0, 1.0))
MODEL2 = EvenPolynomialPotential(2, (0.0, -26.0, 6.0, 1.0))
MODEL3 = EvenPolynomialPotential(3, (0.0, 1.5, -2.5, 0.25, -0.5, 0.25))
MODELS = {"model1": (MODEL1, 4.0), "model2": (MODEL2, 5.0), "model3": (MODEL3, 5.0)}


def harmonic(w0):
    return EvenPolynomialPotential(1, (0.0, w0 * w0))


@pytest.fixture
def model1():
    return MODEL1


@pytest.fixture
def model2():
    return MODEL2


@pytest.fixture
def model3():
    return MODEL3
