"""
Classification and decomposition of Temperley-Lieb immanants into percent
immanants.

For a 321-avoiding w the signed immanant sign(w) * Imm_w is:

* a single percent immanant (of hull(w)) iff w also avoids 1324 and 2143;
* a sum of exactly two percent immanants iff w additionally contains 2143
  but avoids 24153, 31524, 231564 and 312645;
* not a linear combination of percent immanants otherwise.

Permutations avoiding 321 and 1324 but containing 2143 fall into two block
shapes, Case 1 = [2][1][3][5][4] with block lengths (a, b, e, c, d) and
Case 2 = [3][5][1][6][2][4] with block lengths (a, e, b, c, f, d); those
parameters drive closed-form coefficients and the complementary-minor
expansions below.
"""

from __future__ import annotations

import dataclasses
import math
from itertools import combinations

from .errors import PreconditionError
from .immanant import (
    Immanant,
    SkewShape,
    from_cells,
    hull,
    lies_in,
    percent_immanant,
    tl_immanant,
)
from .perm import (
    Perm,
    avoids,
    conjugate_by_longest,
    inverse,
    is_321_avoiding,
    sign,
)

PATTERN_1324 = (1, 3, 2, 4)
PATTERN_2143 = (2, 1, 4, 3)
FORBIDDEN_PATTERNS = (
    PATTERN_1324,
    (2, 4, 1, 5, 3),
    (3, 1, 5, 2, 4),
    (2, 3, 1, 5, 6, 4),
    (3, 1, 2, 6, 4, 5),
)


@dataclasses.dataclass(frozen=True)
class Case1:
    """Block lengths (a, b, e, c, d) of the shape [2][1][3][5][4]."""

    a: int
    b: int
    e: int
    c: int
    d: int

    @property
    def n(self) -> int:
        return self.a + self.b + self.e + self.c + self.d

    def to_json(self) -> dict:
        return {"variant": "case1", "a": self.a, "b": self.b, "e": self.e,
                "c": self.c, "d": self.d}


@dataclasses.dataclass(frozen=True)
class Case2:
    """Block lengths (a, e, b, c, f, d) of the shape [3][5][1][6][2][4]."""

    a: int
    e: int
    b: int
    c: int
    f: int
    d: int

    @property
    def n(self) -> int:
        return self.a + self.e + self.b + self.c + self.f + self.d

    def to_json(self) -> dict:
        return {"variant": "case2", "a": self.a, "e": self.e, "b": self.b,
                "c": self.c, "f": self.f, "d": self.d}


CaseParams = Case1 | Case2


def case_params_from_json(data: dict) -> CaseParams:
    variant = data.get("variant")
    if variant == "case1":
        return Case1(data["a"], data["b"], data["e"], data["c"], data["d"])
    if variant == "case2":
        return Case2(data["a"], data["e"], data["b"], data["c"], data["f"], data["d"])
    raise ValueError(f"unknown case variant {variant!r}")


@dataclasses.dataclass(frozen=True)
class Decomposition:
    """sign(w) * Imm_w written as a sum of percent immanants, when possible."""

    kind: str  # "one" | "two" | "none"
    sign: int
    shapes: tuple[SkewShape, ...]

    def to_json(self) -> dict:
        if self.kind == "none":
            return {"kind": "none"}
        return {
            "kind": self.kind,
            "sign": self.sign,
            "shapes": [s.to_json() for s in self.shapes],
        }

    @classmethod
    def from_json(cls, data: dict) -> Decomposition:
        if data["kind"] == "none":
            return cls("none", 0, ())
        return cls(
            data["kind"],
            int(data["sign"]),
            tuple(SkewShape.from_json(s) for s in data["shapes"]),
        )


def corner_params(w: Perm) -> tuple[int, int, int, int]:
    """(w^{-1}(1) - 1, w(1) - 1, n - w(n), n - w^{-1}(n)): the corner
    rectangle dimensions of the hull of a 321-avoiding permutation.

    >>> corner_params((3, 1, 5, 2, 4))
    (1, 2, 1, 2)
    """
    n = len(w)
    winv = inverse(w)
    return (winv[0] - 1, w[0] - 1, n - w[n - 1], n - winv[n - 1])


def avoids_main_patterns(w: Perm) -> bool:
    """True iff w avoids 321 and the five patterns whose absence makes the
    Temperley-Lieb immanant a combination of percent immanants."""
    return is_321_avoiding(w) and avoids(w, *FORBIDDEN_PATTERNS)


def _seq(a: int, b: int) -> list[int]:
    """The run (a, a+1, ..., b); empty when a > b."""
    return list(range(a, b + 1))


def build_case1(a: int, b: int, e: int, c: int, d: int) -> Perm:
    """One-line notation of the Case-1 permutation.

    >>> build_case1(1, 1, 0, 1, 1)
    (2, 1, 4, 3)
    """
    if min(a, b, c, d) < 1 or e < 0:
        raise PreconditionError("case-1 blocks need a, b, c, d >= 1 and e >= 0")
    n = a + b + e + c + d
    word = (
        _seq(b + 1, b + a)
        + _seq(1, b)
        + _seq(b + a + 1, b + a + e)
        + _seq(n - c + 1, n)
        + _seq(n - c - d + 1, n - c)
    )
    return tuple(word)


def build_case2(a: int, e: int, b: int, c: int, f: int, d: int) -> Perm:
    """One-line notation of the Case-2 permutation.

    >>> build_case2(1, 1, 1, 1, 0, 1)
    (2, 4, 1, 5, 3)
    >>> build_case2(1, 0, 1, 1, 1, 1)
    (3, 1, 5, 2, 4)
    """
    if min(a, b, c, d) < 1 or min(e, f) < 0 or max(e, f) < 1:
        raise PreconditionError(
            "case-2 blocks need a, b, c, d >= 1 and max(e, f) >= 1"
        )
    n = a + e + b + c + f + d
    word = (
        _seq(b + f + 1, b + f + a)
        + _seq(n - c - e + 1, n - c)
        + _seq(1, b)
        + _seq(n - c + 1, n)
        + _seq(b + 1, b + f)
        + _seq(n - d - c - e + 1, n - c - e)
    )
    return tuple(word)


def _check_classifiable(w: Perm) -> None:
    if not is_321_avoiding(w):
        raise PreconditionError(f"{w} contains the pattern 321")
    if not avoids(w, PATTERN_1324):
        raise PreconditionError(f"{w} contains the pattern 1324")
    if avoids(w, PATTERN_2143):
        raise PreconditionError(f"{w} avoids the pattern 2143")


def classify_2143(w: Perm) -> CaseParams:
    """Case parameters of a permutation avoiding 321 and 1324 and
    containing 2143.

    >>> classify_2143((2, 1, 4, 3))
    Case1(a=1, b=1, e=0, c=1, d=1)
    >>> classify_2143((2, 4, 1, 5, 3))
    Case2(a=1, e=1, b=1, c=1, f=0, d=1)
    """
    _check_classifiable(w)
    n = len(w)
    ap, bp, cp, dp = corner_params(w)
    if ap + bp + cp + dp <= n:
        params: CaseParams = Case1(ap, bp, n - ap - bp - cp - dp, cp, dp)
        rebuilt = build_case1(params.a, params.b, params.e, params.c, params.d)
    else:
        # The finer split of the corner parameters: a counts the leading
        # positions whose values stay below the top band, d the trailing
        # positions whose values stay above the bottom band.
        a = sum(1 for x in range(1, ap + 1) if w[x - 1] <= n - cp)
        d = sum(1 for x in range(n - dp + 1, n + 1) if w[x - 1] >= bp + 1)
        e, f = ap - a, dp - d
        params = Case2(a, e, bp - f, cp - e, f, d)
        rebuilt = build_case2(
            params.a, params.e, params.b, params.c, params.f, params.d
        )
    assert rebuilt == w, (w, params)
    return params


def _binomial(a: int, b: int) -> int:
    # Zero when either argument is negative.
    if a < 0 or b < 0:
        return 0
    return math.comb(a + b, a)


def closed_form_coeff(w: Perm, u: Perm) -> int:
    """The coefficient of x_u in Imm_w, in closed form, for w avoiding 321
    and 1324.

    >>> closed_form_coeff((2, 1, 4, 3), (2, 1, 3, 4))
    0
    >>> closed_form_coeff((2, 1, 4, 3), (4, 3, 2, 1))
    2
    """
    if len(w) != len(u):
        raise PreconditionError(f"size mismatch: {len(w)} vs {len(u)}")
    if not is_321_avoiding(w):
        raise PreconditionError(f"{w} contains the pattern 321")
    if not avoids(w, PATTERN_1324):
        raise PreconditionError(f"{w} contains the pattern 1324")
    n = len(w)
    if avoids(w, PATTERN_2143):
        # Single-percent regime: the immanant is the signed indicator of
        # the hull.
        return sign(w) * sign(u) if lies_in(u, hull(w)) else 0
    params = classify_2143(w)
    if isinstance(params, Case1):
        a, b, c, d = params.a, params.b, params.c, params.d
        if any(u[i - 1] <= b for i in range(1, a + 1)):
            return 0
        if any(u[i - 1] > n - c for i in range(n + 1 - d, n + 1)):
            return 0
        A = sum(1 for i in range(1, a + 1) if u[i - 1] > n - c)
        B = sum(1 for j in range(1, b + 1) if inverse(u)[j - 1] > n - d)
        return sign(w) * sign(u) * _binomial(A, B)
    a, e, b, c, f, d = (
        params.a, params.e, params.b, params.c, params.f, params.d,
    )
    if any(u[i - 1] <= b + f for i in range(1, a + e + 1)):
        return 0
    if any(u[i - 1] > b + f + a + d for i in range(a + e + b + c + 1, n + 1)):
        return 0
    mid = range(a + e + 1, a + e + b + c + 1)
    A = c - sum(1 for i in mid if u[i - 1] > b + f + a + d)
    B = b - sum(1 for i in mid if u[i - 1] <= b + f)
    return sign(w) * sign(u) * _binomial(A, B)


def antidiag_coeff(w: Perm) -> int:
    """|f_w(w0)| in closed form for w avoiding 321 and 1324 and containing
    2143.

    >>> antidiag_coeff((2, 1, 4, 3))
    2
    >>> antidiag_coeff((2, 3, 1, 5, 6, 4))
    3
    """
    params = classify_2143(w)
    a, b, c, d = params.a, params.b, params.c, params.d
    return math.comb(min(a, c) + min(b, d), min(b, d))


def cm_expansion(w: Perm) -> list[tuple[int, frozenset[int], frozenset[int]]]:
    """The signed complementary-minor expansion of the Temperley-Lieb
    immanant of w (for w avoiding 321 and 1324, containing 2143):
    sign(w) * sum of sign * CM_{I,J} over the returned triples equals Imm_w.

    Terms are ordered lexicographically by (sorted I, sorted J).
    """
    params = classify_2143(w)
    n = len(w)
    out = []
    if isinstance(params, Case1):
        a, b, c, d = params.a, params.b, params.c, params.d
        for k1 in range(0, min(a, b) + 1):
            for I1 in combinations(range(1, a + 1), k1):
                for I2 in combinations(range(1, b + 1), k1):
                    for k3 in range(0, min(c, d) + 1):
                        for I3 in combinations(range(n - d + 1, n + 1), k3):
                            for I4 in combinations(range(n - c + 1, n + 1), k3):
                                s = -1 if (k1 + k3) % 2 else 1
                                out.append(
                                    (s, frozenset(I1 + I3), frozenset(I2 + I4))
                                )
    else:
        a, e, b, c, f, d = (
            params.a, params.e, params.b, params.c, params.f, params.d,
        )
        left = tuple(range(1, a + e + 1))
        right = tuple(range(b + f + a + d + 1, n + 1))
        for I1 in combinations(range(a + e + 1, a + e + b + c + 1), c):
            for I2 in combinations(range(b + f + 1, b + f + a + d + 1), a):
                out.append((1, frozenset(left + I1), frozenset(I2 + right)))
    out.sort(key=lambda term: (sorted(term[1]), sorted(term[2])))
    return out


def rect_cm_expansion(w: Perm) -> list[tuple[frozenset[int], frozenset[int]]]:
    """The complementary-minor expansion of the percent immanant of hull(w),
    for w avoiding 321, 1324 and 2143 with w(1) = 1 or w(1) = w(n) + 1:
    all (I, [1, w(n)]) with |I| = w(n) and
    [w^{-1}(n)+1, n] <= I <= [w^{-1}(1), n].

    >>> [(sorted(I), sorted(J)) for I, J in rect_cm_expansion((3, 1, 4, 2))]
    [([2, 4], [1, 2]), ([3, 4], [1, 2])]
    """
    n = len(w)
    if not (is_321_avoiding(w) and avoids(w, PATTERN_1324, PATTERN_2143)):
        raise PreconditionError(f"{w} must avoid 321, 1324 and 2143")
    if w[0] != 1 and w[0] != w[n - 1] + 1:
        raise PreconditionError(
            f"{w} is not in normal form: need w(1) = 1 or w(1) = w(n) + 1"
        )
    winv = inverse(w)
    forced = tuple(range(winv[n - 1] + 1, n + 1))
    free = range(winv[0], winv[n - 1] + 1)
    k = w[n - 1] - len(forced)
    J = frozenset(range(1, w[n - 1] + 1))
    out = [
        (frozenset(forced + extra), J) for extra in combinations(free, k)
    ]
    out.sort(key=lambda term: sorted(term[0]))
    return out


def reduce_to_special(w: Perm) -> tuple[Perm, tuple[str, ...]]:
    """Transform w (avoiding 321, 1324 and 2143) into the normal form with
    w(1) = 1 or w(1) = w(n) + 1, recording the transforms applied:
    "S" is inversion, "T" is conjugation by the longest word.

    >>> reduce_to_special((3, 1, 4, 2))
    ((3, 1, 4, 2), ())
    """
    if not (is_321_avoiding(w) and avoids(w, PATTERN_1324, PATTERN_2143)):
        raise PreconditionError(f"{w} must avoid 321, 1324 and 2143")
    n = len(w)
    if w[0] == 1:
        return w, ()
    if w[n - 1] == n:
        return conjugate_by_longest(w), ("T",)
    if w[0] > w[n - 1]:
        # 321-avoidance forces w(1) = w(n) + 1 here.
        return w, ()
    return inverse(w), ("S",)


# ---------------------------------------------------------------------------
# The one-or-two percent immanant decomposition


def _remove_rects(n: int, rects: list[tuple[range, range]]) -> SkewShape:
    cells = {(i, j) for i in range(1, n + 1) for j in range(1, n + 1)}
    for rows, cols in rects:
        cells -= {(i, j) for i in rows for j in cols}
    return from_cells(n, cells)


def _second_shape(params: Case1) -> SkewShape:
    """The companion shape of the two-term decomposition, for a = 1."""
    n, b, c, d = params.n, params.b, params.c, params.d
    if params.b == 1:
        # Remove the d x c lower-right rectangle and the (n-d) x 1 and
        # 1 x (n-c) upper-left rectangles.
        return _remove_rects(n, [
            (range(n - d + 1, n + 1), range(n - c + 1, n + 1)),
            (range(1, n - d + 1), range(1, 2)),
            (range(1, 2), range(1, n - c + 1)),
        ])
    assert params.d == 1
    # The doubled coefficients here are exactly those with u(1) > n-c and
    # u(n) <= b, so the removals are the thin row strips 1 x (n-c) in the
    # upper-left and 1 x (n-b) in the lower-right.
    return _remove_rects(n, [
        (range(n, n + 1), range(b + 1, n + 1)),
        (range(1, 2), range(1, n - c + 1)),
    ])


def decompose(w: Perm, validate: bool | None = None) -> Decomposition:
    """Write sign(w) * Imm_w as a sum of at most two percent immanants, or
    report that no combination of percent immanants equals Imm_w.

    With validate (default: on for n <= 6) the shape sum is checked
    coefficientwise against the Temperley-Lieb immanant.

    >>> decompose((1, 2, 3, 4)).kind
    'one'
    >>> decompose((2, 4, 1, 5, 3)).kind
    'none'
    """
    if not is_321_avoiding(w):
        raise PreconditionError(f"{w} contains the pattern 321")
    n = len(w)
    if validate is None:
        validate = n <= 6
    if not avoids_main_patterns(w):
        return Decomposition("none", sign(w), ())
    if avoids(w, PATTERN_2143):
        result = Decomposition("one", sign(w), (hull(w),))
    else:
        params = classify_2143(w)
        assert isinstance(params, Case1)
        if params.a == 1:
            shapes = (hull(w), _second_shape(params))
        else:
            # c = 1: transport the a = 1 construction through the
            # anti-transpose symmetry w -> w0 . w^{-1} . w0.
            assert params.c == 1
            mirror = conjugate_by_longest(inverse(w))
            mirror_params = classify_2143(mirror)
            assert isinstance(mirror_params, Case1) and mirror_params.a == 1
            shapes = tuple(
                s.anti_transpose()
                for s in (hull(mirror), _second_shape(mirror_params))
            )
            assert shapes[0] == hull(w)
        result = Decomposition("two", sign(w), shapes)
    if validate:
        total = Immanant(n, {})
        for s in result.shapes:
            total = total + percent_immanant(s)
        expected = tl_immanant(w).scaled(result.sign)
        assert total == expected, f"decomposition of {w} failed validation"
    return result
