import json

import numpy as np
import pytest

from cotriple.algebra import (Algebra, builtin_algebra, check_algebra,
                              path_algebra_acyclic, triangular2,
                              truncated_poly)
from cotriple.errors import (AssociativityViolation, ContractViolation,
                             UnitViolation, UnsupportedQuiver)


def test_builtin_algebras_validate():
    for key, dim in (("A1", 2), ("A2", 3), ("A3", 6)):
        alg = builtin_algebra(key)
        assert alg.dim == dim
        assert alg.char == 2
        check_algebra(alg.mul, alg.unit, alg.char, name=alg.name)


def test_truncated_poly_multiplication():
    alg = truncated_poly(2, 2)          # k[x]/(x^2)
    x = np.array([0, 1], dtype=np.int64)
    assert not alg.multiply(x, x).any()   # x * x = 0
    one = alg.unit
    assert np.array_equal(alg.multiply(one, x), x)


def test_path_algebra_relations():
    alg = path_algebra_acyclic(2, [(1, 2)], 2)
    assert alg.dim == 3
    e1 = np.array([1, 0, 0], dtype=np.int64)
    e2 = np.array([0, 1, 0], dtype=np.int64)
    a = np.array([0, 0, 1], dtype=np.int64)
    assert np.array_equal(alg.multiply(e1, e1), e1)
    assert not alg.multiply(e1, e2).any()
    # the arrow 1 -> 2 is killed by composing with the wrong idempotents
    comp = alg.multiply(alg.multiply(e2, a), e1)
    comp_other = alg.multiply(alg.multiply(e1, a), e2)
    assert np.array_equal(comp, a) or np.array_equal(comp_other, a)
    assert not (comp.any() and comp_other.any())


def test_cyclic_quiver_rejected():
    with pytest.raises(UnsupportedQuiver):
        path_algebra_acyclic(2, [(1, 2), (2, 1)], 2)


def test_triangular2_contains_nilpotent_part():
    alg = triangular2(truncated_poly(2, 2))   # T_2(k[x]/(x^2)), dim 6
    assert alg.dim == 6
    check_algebra(alg.mul, alg.unit, alg.char, name=alg.name)


def test_opposite_is_involutive_and_valid():
    alg = builtin_algebra("A2")
    opp = alg.opposite()
    check_algebra(opp.mul, opp.unit, opp.char, name=opp.name)
    a = np.array([1, 0, 1], dtype=np.int64)
    b = np.array([0, 1, 1], dtype=np.int64)
    assert np.array_equal(opp.multiply(a, b), alg.multiply(b, a))
    assert alg.opposite().opposite() is alg or np.array_equal(
        alg.opposite().opposite().mul, alg.mul)


def test_spec_roundtrip(tmp_path):
    alg = builtin_algebra("A3")
    path = tmp_path / "alg.json"
    alg.dump(path)
    spec = json.loads(path.read_text())
    again = Algebra.from_spec(spec, name="roundtrip")
    assert np.array_equal(again.mul, alg.mul)
    assert np.array_equal(again.unit, alg.unit)
    assert again.char == alg.char


def test_bad_structure_constants_rejected():
    mul = np.zeros((2, 2, 2), dtype=np.int64)
    mul[0, 0, 1] = 1                     # e0 * e0 = e1, nothing else: no unit
    with pytest.raises((AssociativityViolation, UnitViolation, ContractViolation)):
        Algebra(mul, unit=[1, 0], char=2, name="broken").validate()
