import itertools
import json
import random
from fractions import Fraction

import pytest

from tlimm import immanant, perm, tl
from tlimm.errors import LimitError, PreconditionError


def test_skew_shape_validation():
    immanant.skew_shape(5, (5, 5, 3, 2, 2), (2, 1))
    with pytest.raises(ValueError):
        immanant.SkewShape(3, (1, 2, 3), (0, 0, 0))  # lam increasing
    with pytest.raises(ValueError):
        immanant.SkewShape(3, (3, 2, 1), (3, 3, 0))  # mu above lam
    with pytest.raises(ValueError):
        immanant.skew_shape(2, (3, 1))  # out of the box


def test_hull_anchors():
    assert immanant.hull(perm.identity(4)) == immanant.full_square(4)
    assert immanant.hull((2, 1, 4, 3)) == immanant.skew_shape(
        4, (4, 4, 4, 3), (1, 0, 0, 0)
    )
    assert immanant.hull((2, 3, 4, 1)) == immanant.skew_shape(
        4, (4, 4, 4, 1), (1, 1, 1, 0)
    )


def test_lies_in_and_shape_leq():
    shape = immanant.skew_shape(5, (5, 5, 3, 2, 2), (2, 1))
    assert not immanant.lies_in((3, 4, 5, 1, 2), shape)  # row 3 needs <= 3
    for w in perm.all_perms(4):
        assert immanant.lies_in(w, immanant.hull(w))
        assert immanant.lies_in(w, immanant.full_square(4))
        assert immanant.shape_leq(immanant.hull(w), immanant.full_square(4))
    assert not immanant.lies_in((1, 2, 3, 4), immanant.hull((2, 1, 4, 3)))
    assert not immanant.shape_leq(
        immanant.hull((2, 1, 4, 3)), immanant.hull((2, 3, 4, 1))
    )


@pytest.mark.parametrize("n", range(1, 6))
def test_engulfing(n):
    """lies_in(w, s) iff shape_leq(hull(w), s)."""
    shapes = {immanant.hull(w) for w in perm.all_perms(n)}
    shapes.add(immanant.full_square(n))
    for w in perm.all_perms(n):
        hw = immanant.hull(w)
        for s in shapes:
            assert immanant.lies_in(w, s) == immanant.shape_leq(hw, s)


def test_percent_immanant():
    det = immanant.percent_immanant(immanant.full_square(3))
    assert det == immanant.determinant_immanant(3)
    f = immanant.percent_immanant(immanant.hull((2, 1, 4, 3)))
    assert f.coeff((2, 1, 4, 3)) == 1
    shape = immanant.skew_shape(5, (5, 5, 3, 2, 2), (2, 1))
    assert immanant.percent_immanant(shape).coeff((3, 4, 5, 1, 2)) == 0


@pytest.mark.parametrize("n", range(1, 5))
def test_bigtableau_antidiagonal_and_alternation(n):
    """Over every shape in the n x n box: a nonzero percent immanant's shape
    holds the whole anti-diagonal, and every percent immanant alternates in
    sign across 1324-adjacent pairs."""
    bounds = [
        tuple(v) for v in itertools.product(range(n + 1), repeat=n)
        if all(v[i] >= v[i + 1] for i in range(n - 1))
    ]
    for lam in bounds:
        for mu in bounds:
            if any(m > l for l, m in zip(lam, mu)):
                continue
            shape = immanant.SkewShape(n, lam, mu)
            f = immanant.percent_immanant(shape)
            assert immanant.is_1324_sign_alternating(f)
            if not f.is_zero():
                assert all(
                    shape.contains_cell(i, n + 1 - i) for i in range(1, n + 1)
                )


def test_tl_immanant_anchors():
    f = immanant.tl_immanant((2, 1))
    assert f.coeff((2, 1)) == 1 and f.coeff((1, 2)) == 0
    assert immanant.tl_immanant((2, 1, 4, 3)).coeff((4, 3, 2, 1)) == 2
    for n in range(1, 6):
        assert immanant.tl_immanant(perm.identity(n)) == immanant.determinant_immanant(n)
    with pytest.raises(PreconditionError):
        immanant.tl_immanant((3, 2, 1))


@pytest.mark.parametrize("n", range(1, 7))
def test_all_tl_immanants_match_f_coeff(n):
    table = tl.theta_table(n)
    imms = immanant.all_tl_immanants(n)
    for w in perm.avoiding_321(n):
        target = tl.beta(w)
        for u in perm.all_perms(n):
            assert imms[w].coeff(u) == table[u].coeff(target)


def test_cm_immanant():
    assert immanant.cm_immanant(3, (), ()) == immanant.determinant_immanant(3)
    f = immanant.cm_immanant(4, {1}, {4})
    assert f.coeff((4, 1, 2, 3)) == -1
    assert f.coeff((4, 1, 3, 2)) == 1
    assert f.coeff((1, 4, 2, 3)) == 0
    with pytest.raises(PreconditionError):
        immanant.cm_immanant(3, {1}, {1, 2})


@pytest.mark.parametrize("n", range(1, 5))
def test_cm_sign_law(n):
    """CM_{I,J} = (-1)^(s(I)+s(J)) Delta_{I,J} Delta_{Ic,Jc}, coefficientwise:
    the minor product assigns sgn(restriction) * sgn(complement restriction)."""
    for k in range(n + 1):
        for I in itertools.combinations(range(1, n + 1), k):
            for J in itertools.combinations(range(1, n + 1), k):
                f = immanant.cm_immanant(n, I, J)
                s = immanant.subset_sign(I) * immanant.subset_sign(J)
                for u in perm.all_perms(n):
                    if {u[i - 1] for i in I} != set(J):
                        assert f.coeff(u) == 0
                        continue
                    # product of the signs of the two flattened blocks
                    inside = perm.restriction(u, I) if I else ()
                    comp = tuple(sorted(set(range(1, n + 1)) - set(I)))
                    outside = perm.restriction(u, comp) if comp else ()
                    prod = (perm.sign(inside) if inside else 1) * (
                        perm.sign(outside) if outside else 1
                    )
                    assert f.coeff(u) == s * prod


def test_immanant_arithmetic_and_json():
    f = immanant.tl_immanant((2, 1, 4, 3))
    assert immanant.add(f, immanant.scale(f, -1)).is_zero()
    g = immanant.Immanant.from_json(f.to_json())
    assert immanant.equal(f, g)
    round_trip = json.loads(json.dumps(f.to_json()))
    assert immanant.Immanant.from_json(round_trip) == f
    h = immanant.scale(f, Fraction(1, 2))
    assert immanant.Immanant.from_json(h.to_json()) == h


def test_evaluate():
    assert immanant.evaluate(immanant.determinant_immanant(3), [[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == 1
    X = immanant.parse_matrix('[["1/2", "1"], ["1", "2"]]')
    assert immanant.evaluate(immanant.determinant_immanant(2), X) == 0
    with pytest.raises(PreconditionError):
        immanant.evaluate(immanant.determinant_immanant(2), [[1]])


@pytest.mark.parametrize("n", (4, 5))
def test_three_equal_rows_kill_tl_immanants(n):
    rng = random.Random(n)
    for trial in range(3):
        base = [[Fraction(rng.randint(-3, 3)) for _ in range(n)] for _ in range(n)]
        base[1] = base[0][:]
        base[n - 1] = base[0][:]
        for w in perm.avoiding_321(n):
            assert immanant.evaluate(immanant.tl_immanant(w), base) == 0


def test_witness_matrix():
    X = immanant.witness_matrix((2, 1, 4, 3))
    assert X[0] == X[2] == X[3]
    assert abs(immanant.evaluate(
        immanant.percent_immanant(immanant.hull((2, 1, 4, 3))), X
    )) == 1
    assert immanant.evaluate(immanant.tl_immanant((2, 1, 4, 3)), X) == 0


@pytest.mark.parametrize("n", range(1, 6))
def test_transforms(n):
    imms = immanant.all_tl_immanants(n)
    for w in perm.avoiding_321(n):
        assert immanant.s_transform(imms[w]) == imms[perm.inverse(w)]
        assert immanant.t_transform(imms[w]) == imms[perm.conjugate_by_longest(w)]
    for w in perm.all_perms(n):
        f = immanant.percent_immanant(immanant.hull(w))
        assert immanant.s_transform(f) == immanant.percent_immanant(
            immanant.hull(perm.inverse(w))
        )
        assert immanant.t_transform(f) == immanant.percent_immanant(
            immanant.hull(perm.conjugate_by_longest(w))
        )
        assert immanant.s_transform(immanant.s_transform(f)) == f
        assert immanant.t_transform(immanant.t_transform(f)) == f


def test_shape_transforms_match_immanant_transforms():
    for w in perm.all_perms(4):
        shape = immanant.hull(w)
        assert immanant.percent_immanant(shape.transpose()) == immanant.s_transform(
            immanant.percent_immanant(shape)
        )
        assert immanant.percent_immanant(shape.rotate()) == immanant.t_transform(
            immanant.percent_immanant(shape)
        )
        anti = shape.anti_transpose()
        assert immanant.percent_immanant(anti) == immanant.s_transform(
            immanant.t_transform(immanant.percent_immanant(shape))
        )


def test_sign_alternation():
    for n in (3, 4):
        for w in perm.all_perms(n):
            assert immanant.is_1324_sign_alternating(
                immanant.percent_immanant(immanant.hull(w))
            )
    assert immanant.is_1324_sign_alternating(immanant.determinant_immanant(4))
    assert not immanant.is_1324_sign_alternating(immanant.tl_immanant((2, 4, 1, 5, 3)))


@pytest.mark.parametrize("n", range(2, 7))
def test_classes_are_hull_fibers(n):
    classes = immanant.related_classes(n)
    fibers = {}
    for w in perm.all_perms(n):
        fibers.setdefault(immanant.hull(w), set()).add(w)
    assert {frozenset(c) for c in classes} == {frozenset(v) for v in fibers.values()}


def test_classes_examples():
    assert all(len(c) == 1 for c in immanant.related_classes(3))
    big = next(c for c in immanant.related_classes(5) if (1, 2, 3, 4, 5) in c)
    assert set(big) == {
        w for w in perm.all_perms(5) if w[0] == 1 and w[4] == 5
    }


def test_percent_basis_decompose():
    assert immanant.percent_basis_decompose(immanant.zero_immanant(3)) == []
    for n in (3, 4, 5):
        for w in perm.avoiding_321(n):
            f = immanant.percent_immanant(immanant.hull(w))
            rebuilt = immanant.zero_immanant(n)
            for rep, c in immanant.percent_basis_decompose(f):
                members = next(
                    cl for cl in immanant.related_classes(n) if rep in cl
                )
                rebuilt = rebuilt + immanant.class_indicator(n, members).scaled(c)
            assert rebuilt == f
    f = immanant.tl_immanant((2, 1, 4, 3))
    rebuilt = immanant.zero_immanant(4)
    for rep, c in immanant.percent_basis_decompose(f):
        members = next(cl for cl in immanant.related_classes(4) if rep in cl)
        rebuilt = rebuilt + immanant.class_indicator(4, members).scaled(c)
    assert rebuilt == f
    with pytest.raises(PreconditionError):
        immanant.percent_basis_decompose(immanant.tl_immanant((2, 4, 1, 5, 3)))


def test_limits(monkeypatch):
    monkeypatch.setenv("TLIMM_MAX_N", "4")
    with pytest.raises(LimitError):
        immanant.determinant_immanant(5)
    monkeypatch.delenv("TLIMM_MAX_N")
    with pytest.raises(LimitError):
        immanant.determinant_immanant(9)
