"""Shared fixture algebras and actions, built directly from domain objects."""

import pytest

from invring.action import DerivationAction
from invring.liealg import LieAlgebra
from invring.poly import AlgebraSignature, parse_poly


def build_action(names, degrees, labels, brackets, images):
    sig = AlgebraSignature(tuple(names), tuple(degrees))
    lie = LieAlgebra.from_brackets(tuple(labels), brackets)
    polys = [[parse_poly(images[j][i], sig) for i in range(sig.nvars)]
             for j in range(lie.dim)]
    return DerivationAction(sig, lie, polys)


@pytest.fixture
def torus_action():
    return build_action(("x", "y"), (1, 1), ("X",), {}, [["x", "-y"]])


@pytest.fixture
def weitzenbock_action():
    return build_action(("x", "y"), (1, 1), ("X",), {}, [["0", "x"]])


@pytest.fixture
def borel_action():
    return build_action(
        ("x", "y"), (1, 1),
        ("H", "E"), {(0, 1): {1: 2}},
        [["x", "-y"], ["0", "x"]],
    )


@pytest.fixture
def sl2quad_action():
    return build_action(
        ("a", "b", "c"), (1, 1, 1),
        ("e", "f", "h"),
        {(2, 0): {0: 2}, (2, 1): {1: -2}, (0, 1): {2: 1}},
        [["0", "2*a", "b"], ["b", "2*c", "0"], ["2*a", "0", "-2*c"]],
    )


@pytest.fixture
def rotation_action():
    return build_action(("x", "y"), (1, 1), ("X",), {}, [["-y", "x"]])


@pytest.fixture
def sl2():
    return LieAlgebra.from_brackets(
        ("e", "f", "h"), {(2, 0): {0: 2}, (2, 1): {1: -2}, (0, 1): {2: 1}}
    )


@pytest.fixture
def borel_lie():
    return LieAlgebra.from_brackets(("H", "E"), {(0, 1): {1: 2}})


@pytest.fixture
def abelian_1d():
    return LieAlgebra.from_brackets(("X",), {})
