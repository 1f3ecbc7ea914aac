import random

import pytest

from wedderburn import FiniteField, QuaternionAlgebra, RationalFunctionField


@pytest.fixture
def f4():
    return FiniteField.builtin("f4").with_twist(S=("frobenius", 1))


@pytest.fixture
def f8_sd():
    """F_8 with Frobenius and the inner S-derivation by w."""
    return FiniteField.builtin("f8").with_twist(S=("frobenius", 1), D=("inner", "w"))


@pytest.fixture
def f8():
    return FiniteField.builtin("f8").with_twist(S=("frobenius", 1))


@pytest.fixture
def qx_ddx():
    return RationalFunctionField().with_twist(D=("ddx",))


@pytest.fixture
def h():
    return QuaternionAlgebra()


@pytest.fixture
def h_inner():
    """Quaternions with S = conjugation by 1 + i and D the inner S-derivation by j."""
    return QuaternionAlgebra().with_twist(S=("inner", "1 + i"), D=("inner", "j"))


@pytest.fixture
def rng():
    return random.Random(20261018)
