import random
from fractions import Fraction

import pytest

from preeuclid import (Matrix, StructureSpec, apply_operator, bilinear_eval, change_basis,
                       load_space, mat_inverse)
from preeuclid.errors import FieldMismatchError, ShapeError, SingularMatrixError, StructureError
from preeuclid.matrix import unit_vector
from preeuclid.scalar import Field, Scalar

from .support import fixture, random_invertible, random_spec, spec_of

G = Field.GAUSSIAN_RATIONAL


def test_load_first_example():
    spec = spec_of("real5_connected")
    assert spec.n == 5 and spec.field is Field.RATIONAL
    assert spec.gram[spec.index("e2"), spec.index("e5")] == 7
    # f(e1) = f(e3) = f(e5)
    assert spec.op.column(0) == spec.op.column(2) == spec.op.column(4)


def test_load_one_dimensional():
    spec = load_space({"basis": ["e1"], "gram": [[0]], "operator": [[0]]})
    assert spec.n == 1


def test_load_shape_mismatch():
    with pytest.raises(ShapeError):
        load_space({"basis": [f"e{i}" for i in range(5)],
                    "gram": Matrix.zeros(4, 4), "operator": Matrix.zeros(5, 5)})


def test_duplicate_labels():
    with pytest.raises(StructureError):
        load_space({"basis": ["a", "a"], "gram": Matrix.zeros(2, 2), "operator": Matrix.zeros(2, 2)})


def test_empty_basis_rejected():
    with pytest.raises(StructureError):
        StructureSpec((), Matrix.zeros(0, 0), Matrix.zeros(0, 0))


def test_mixed_field_tags_rejected():
    with pytest.raises(FieldMismatchError):
        StructureSpec(("a",), Matrix.zeros(1, 1), Matrix.zeros(1, 1, G))
    with pytest.raises(FieldMismatchError):
        load_space({"field": "rational", "basis": ["a"], "gram": [[Scalar(0, 1)]], "operator": [[0]]})


def test_bilinear_eval_examples():
    spec = spec_of("real5_connected")
    assert bilinear_eval(spec, spec.vector({"e2": 1}), spec.vector({"e5": 1})) == 7
    assert bilinear_eval(spec, spec.vector({"e5": 1}), spec.vector({"e2": 1})) == 0
    assert bilinear_eval(spec, [0] * 5, spec.vector({"e2": 3, "e4": 1})) == 0


def test_bilinear_eval_after_basis_change():
    spec, change = fixture("real5_basis_change")
    new = change_basis(spec, change.transition, change.labels)
    w = lambda k: unit_vector(5, k - 1)
    assert bilinear_eval(new, w(1), w(3)) == 1
    assert bilinear_eval(new, w(3), w(1)) == 3


def test_bilinear_eval_length_checked():
    with pytest.raises(ShapeError):
        bilinear_eval(spec_of("single"), [1, 2], [1])


def test_apply_operator_examples():
    spec = spec_of("real5_connected")
    assert apply_operator(spec, spec.vector({"e2": 1})) == spec.vector({"e4": -1})
    assert apply_operator(spec, [0] * 5) == spec.vector({})
    cspec = spec_of("complex5_two_blocks")
    assert apply_operator(cspec, cspec.vector({"e1": 1})) == cspec.vector({"e1": 2, "e2": -1})


def test_change_basis_example_values():
    spec, change = fixture("real5_basis_change")
    new = change_basis(spec, change.transition, change.labels)
    h = Fraction(1, 2)
    img = lambda label: new.op.column(new.index(label))
    assert img("w1") == new.vector({"w1": 4, "w5": 2})
    assert img("w2") == new.vector({})
    assert img("w3") == img("w4") == new.vector({"w3": h, "w4": h})
    assert img("w5") == new.vector({"w1": 2, "w5": 1})
    gram = {(a, b): new.gram[new.index(a), new.index(b)] for a in new.labels for b in new.labels}
    ones = [("w1", "w3"), ("w2", "w3"), ("w3", "w5"), ("w4", "w5")]
    minus_ones = [("w1", "w4"), ("w2", "w4")]
    threes = [("w3", "w1"), ("w4", "w1"), ("w5", "w3")]
    minus_threes = [("w3", "w2"), ("w4", "w2"), ("w5", "w4")]
    for pairs, v in ((ones, 1), (minus_ones, -1), (threes, 3), (minus_threes, -3)):
        for p in pairs:
            assert gram[p] == v, p
    listed = set(ones + minus_ones + threes + minus_threes)
    assert all(gram[p] == 0 for p in gram if p not in listed)


def test_change_basis_identity():
    spec = spec_of("complex5_two_blocks")
    assert change_basis(spec, Matrix.identity(5, G)) == spec


def test_change_basis_singular():
    spec = spec_of("real4_two_blocks")
    with pytest.raises(SingularMatrixError):
        change_basis(spec, Matrix.zeros(4, 4))


@pytest.mark.parametrize("seed", range(25))
def test_change_basis_round_trip(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 5)
    spec = random_spec(rng, n, 0.4, 0.4)
    t = random_invertible(rng, n)
    new = change_basis(spec, t, [f"w{i}" for i in range(n)])
    back = change_basis(new, mat_inverse(t), spec.labels)
    assert back == spec


@pytest.mark.parametrize("seed", range(25))
def test_coordinates_transform_contravariantly(seed):
    rng = random.Random(100 + seed)
    n = rng.randint(1, 5)
    spec = random_spec(rng, n, 0.5, 0.5)
    t = random_invertible(rng, n)
    new = change_basis(spec, t)
    t_inv = mat_inverse(t)
    for _ in range(5):
        x = [rng.randint(-3, 3) for _ in range(n)]
        y = [rng.randint(-3, 3) for _ in range(n)]
        assert bilinear_eval(new, t_inv.apply(x), t_inv.apply(y)) == bilinear_eval(spec, x, y)
        # T (F' x) == F (T x)
        assert t.apply(apply_operator(new, x)) == apply_operator(spec, t.apply(x))
