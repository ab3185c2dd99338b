"""
Immanants as exact sparse coefficient vectors over S_n.

An :class:`Immanant` maps permutations to exact coefficients (ints, or
Fractions after rational scaling); evaluating it on a matrix of exact
rationals gives the polynomial value sum_u f(u) * x_{1,u(1)} ... x_{n,u(n)}.

Skew shapes live inside the n x n box with (1, 1) the upper-left cell:
``SkewShape(n, lam, mu)`` holds cell (i, j) iff mu_i < j <= lam_i.
"""

from __future__ import annotations

import dataclasses
import functools
import json
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from . import limits
from .errors import PreconditionError
from .perm import (
    Perm,
    adjacent_1324_pairs,
    all_perms,
    conjugate_by_longest,
    format_perm,
    inverse,
    is_321_avoiding,
    parse_perm,
    sign,
)
from .tl import (
    NonCrossingMatching,
    TLElement,
    all_matchings,
    beta,
    beta_inv,
    theta_table,
)

Coeff = int | Fraction
Matrix = tuple[tuple[Fraction, ...], ...]


def _normalize_coeff(c: Coeff) -> Coeff:
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


@dataclasses.dataclass(frozen=True)
class SkewShape:
    """A skew diagram lam/mu embedded in the n x n box."""

    n: int
    lam: tuple[int, ...]
    mu: tuple[int, ...]

    def __post_init__(self):
        n, lam, mu = self.n, self.lam, self.mu
        if len(lam) != n or len(mu) != n:
            raise ValueError("lam and mu must each list one bound per row")
        if any(not 0 <= x <= n for x in lam + mu):
            raise ValueError(f"row bounds must lie in [0, {n}]")
        if any(lam[i] < lam[i + 1] or mu[i] < mu[i + 1] for i in range(n - 1)):
            raise ValueError("lam and mu must be non-increasing")
        if any(m > l for l, m in zip(lam, mu)):
            raise ValueError("mu must be contained in lam")

    def contains_cell(self, i: int, j: int) -> bool:
        """True iff the cell in row i, column j (1-based) is in the shape."""
        return self.mu[i - 1] < j <= self.lam[i - 1]

    def cells(self) -> frozenset[tuple[int, int]]:
        return frozenset(
            (i, j)
            for i in range(1, self.n + 1)
            for j in range(self.mu[i - 1] + 1, self.lam[i - 1] + 1)
        )

    def anti_transpose(self) -> SkewShape:
        """Reflect across the anti-diagonal: (i, j) -> (n+1-j, n+1-i)."""
        n = self.n
        return from_cells(
            n, {(n + 1 - j, n + 1 - i) for i, j in self.cells()}
        )

    def rotate(self) -> SkewShape:
        """Rotate 180 degrees about the center of the box."""
        n = self.n
        return from_cells(
            n, {(n + 1 - i, n + 1 - j) for i, j in self.cells()}
        )

    def transpose(self) -> SkewShape:
        n = self.n
        return from_cells(n, {(j, i) for i, j in self.cells()})

    def to_json(self) -> dict:
        return {"n": self.n, "lambda": list(self.lam), "mu": list(self.mu)}

    @classmethod
    def from_json(cls, data: Mapping) -> SkewShape:
        n = int(data["n"])
        lam = _pad_bounds(n, data["lambda"])
        mu = _pad_bounds(n, data.get("mu", []))
        return cls(n, lam, mu)


def _pad_bounds(n: int, values: Iterable[int]) -> tuple[int, ...]:
    out = [int(v) for v in values]
    if len(out) > n:
        raise ValueError(f"more than {n} row bounds given")
    return tuple(out + [0] * (n - len(out)))


def skew_shape(n: int, lam: Sequence[int], mu: Sequence[int] = ()) -> SkewShape:
    """Build a shape, padding trailing zero rows.

    >>> skew_shape(5, (5, 5, 3, 2, 2), (2, 1)).contains_cell(3, 5)
    False
    """
    return SkewShape(n, _pad_bounds(n, lam), _pad_bounds(n, mu))


def from_cells(n: int, cells: Iterable[tuple[int, int]]) -> SkewShape:
    """Rebuild the lam/mu bounds from a cell set; each row must be a
    contiguous run and the resulting bounds monotone."""
    rows: dict[int, list[int]] = {}
    for i, j in cells:
        rows.setdefault(i, []).append(j)
    lam: list[int | None] = [None] * n
    mu: list[int | None] = [None] * n
    for i in range(1, n + 1):
        cols = sorted(rows.get(i, []))
        if not cols:
            continue
        if cols != list(range(cols[0], cols[-1] + 1)):
            raise ValueError(f"row {i} is not contiguous: {cols}")
        lam[i - 1] = cols[-1]
        mu[i - 1] = cols[0] - 1
    # Empty rows carry no cells; pin their bounds to the largest bound below
    # so the constructor's monotonicity check decides validity.
    running = 0
    for i in range(n - 1, -1, -1):
        if lam[i] is None:
            lam[i] = mu[i] = running
        running = max(running, lam[i])
    return SkewShape(n, tuple(lam), tuple(mu))


def full_square(n: int) -> SkewShape:
    return SkewShape(n, (n,) * n, (0,) * n)


def hull(w: Perm) -> SkewShape:
    """The minimal skew shape through all points (i, w(i)): row i spans from
    the running minimum of w on [1, i] to the suffix maximum on [i, n].

    >>> hull((2, 1, 4, 3))
    SkewShape(n=4, lam=(4, 4, 4, 3), mu=(1, 0, 0, 0))
    """
    n = len(w)
    mu, lam = [], []
    running = n + 1
    for x in w:
        running = min(running, x)
        mu.append(running - 1)
    running = 0
    suffix = [0] * n
    for i in range(n - 1, -1, -1):
        running = max(running, w[i])
        suffix[i] = running
    lam = suffix
    return SkewShape(n, tuple(lam), tuple(mu))


def lies_in(u: Perm, shape: SkewShape) -> bool:
    """True iff every point (i, u(i)) is a cell of the shape."""
    if len(u) != shape.n:
        raise PreconditionError(f"size mismatch: {len(u)} vs {shape.n}")
    return all(shape.mu[i] < x <= shape.lam[i] for i, x in enumerate(u))


def shape_leq(s1: SkewShape, s2: SkewShape) -> bool:
    """Cellwise containment of s1 in s2."""
    if s1.n != s2.n:
        raise PreconditionError(f"box size mismatch: {s1.n} vs {s2.n}")
    return s1.cells() <= s2.cells()


# ---------------------------------------------------------------------------
# Immanants


@dataclasses.dataclass
class Immanant:
    """A sparse exact map S_n -> coefficients; zero coefficients dropped."""

    n: int
    coeffs: dict[Perm, Coeff]

    def __init__(self, n: int, coeffs: Mapping[Perm, Coeff]):
        self.n = n
        self.coeffs = {}
        for u, c in coeffs.items():
            if len(u) != n:
                raise PreconditionError(f"permutation {u} in immanant of size {n}")
            c = _normalize_coeff(c)
            if c:
                self.coeffs[u] = c

    def coeff(self, u: Perm) -> Coeff:
        return self.coeffs.get(tuple(u), 0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Immanant)
            and self.n == other.n
            and self.coeffs == other.coeffs
        )

    def __add__(self, other: Immanant) -> Immanant:
        if self.n != other.n:
            raise PreconditionError(f"size mismatch: {self.n} vs {other.n}")
        coeffs = dict(self.coeffs)
        for u, c in other.coeffs.items():
            coeffs[u] = coeffs.get(u, 0) + c
        return Immanant(self.n, coeffs)

    def __sub__(self, other: Immanant) -> Immanant:
        return self + other.scaled(-1)

    def scaled(self, c: Coeff) -> Immanant:
        return Immanant(self.n, {u: c * v for u, v in self.coeffs.items()})

    def to_json(self) -> dict:
        terms = [
            {"perm": format_perm(u), "coeff": _format_coeff(c)}
            for u, c in sorted(self.coeffs.items())
        ]
        return {"n": self.n, "terms": terms}

    @classmethod
    def from_json(cls, data: Mapping) -> Immanant:
        n = int(data["n"])
        coeffs = {
            parse_perm(term["perm"]): Fraction(str(term["coeff"]))
            for term in data["terms"]
        }
        return cls(n, coeffs)


def _format_coeff(c: Coeff) -> str:
    return str(c)


def add(f: Immanant, g: Immanant) -> Immanant:
    return f + g


def scale(f: Immanant, c: Coeff) -> Immanant:
    return f.scaled(c)


def equal(f: Immanant, g: Immanant) -> bool:
    return f == g


def zero_immanant(n: int) -> Immanant:
    return Immanant(n, {})


def determinant_immanant(n: int) -> Immanant:
    limits.check_limit(n, limits.max_n(), "determinant immanant")
    return Immanant(n, {u: sign(u) for u in all_perms(n)})


def percent_immanant(shape: SkewShape) -> Immanant:
    """Signed indicator of the permutations lying in the shape.

    >>> percent_immanant(hull((2, 1, 4, 3))).coeff((2, 1, 4, 3))
    1
    """
    n = shape.n
    limits.check_limit(n, limits.max_n(), "percent immanant")
    return Immanant(
        n, {u: sign(u) for u in all_perms(n) if lies_in(u, shape)}
    )


def tl_immanant(w: Perm, table: dict[Perm, TLElement] | None = None) -> Immanant:
    """The Temperley-Lieb immanant of a 321-avoiding w: the coefficient of u
    is the coefficient of beta(w) in theta(u)."""
    if not is_321_avoiding(w):
        raise PreconditionError(f"{w} contains the pattern 321")
    n = len(w)
    if table is None:
        table = theta_table(n)
    target = beta(w)
    return Immanant(
        n, {u: elem.coeff(target) for u, elem in table.items()}
    )


@functools.lru_cache(maxsize=4)
def all_tl_immanants(n: int) -> dict[Perm, Immanant]:
    """The Temperley-Lieb immanants of every 321-avoiding w in S_n."""
    table = theta_table(n)
    by_matching: dict[NonCrossingMatching, dict[Perm, int]] = {
        m: {} for m in all_matchings(n)
    }
    for u, elem in table.items():
        for m, c in elem.terms.items():
            by_matching[m][u] = c
    return {
        beta_inv(m): Immanant(n, coeffs) for m, coeffs in by_matching.items()
    }


def cm_immanant(n: int, I: Iterable[int], J: Iterable[int]) -> Immanant:
    """The complementary-minor immanant: sign(u) on permutations with
    u(I) = J, zero elsewhere."""
    I, J = frozenset(I), frozenset(J)
    if len(I) != len(J):
        raise PreconditionError(f"|I| = {len(I)} but |J| = {len(J)}")
    limits.check_limit(n, limits.max_n(), "complementary minor")
    coeffs = {}
    for u in all_perms(n):
        if {u[i - 1] for i in I} == J:
            coeffs[u] = sign(u)
    return Immanant(n, coeffs)


def subset_sign(I: Iterable[int]) -> int:
    """(-1)^(sum of I)."""
    return -1 if sum(I) % 2 else 1


# ---------------------------------------------------------------------------
# Evaluation on exact rational matrices


def as_matrix(rows: Sequence[Sequence]) -> Matrix:
    """Coerce nested sequences of ints / Fractions / "p/q" strings into a
    square matrix of Fractions."""
    out = tuple(
        tuple(Fraction(str(x)) for x in row) for row in rows
    )
    n = len(out)
    if any(len(row) != n for row in out):
        raise ValueError("matrix must be square")
    return out


def parse_matrix(text: str) -> Matrix:
    """Parse a JSON array of arrays of rational strings."""
    return as_matrix(json.loads(text))


def evaluate(f: Immanant, matrix: Sequence[Sequence]) -> Fraction:
    """sum_u f(u) * prod_i X[i, u(i)], exactly.

    >>> evaluate(determinant_immanant(2), [[1, 2], [3, 4]])
    Fraction(-2, 1)
    """
    X = as_matrix(matrix)
    if len(X) != f.n:
        raise PreconditionError(f"size mismatch: matrix {len(X)} vs immanant {f.n}")
    total = Fraction(0)
    for u, c in f.coeffs.items():
        prod = Fraction(1)
        for i, x in enumerate(u):
            prod *= X[i][x - 1]
            if not prod:
                break
        total += c * prod
    return total


def witness_matrix(w: Perm) -> tuple[tuple[int, ...], ...]:
    """A 0/1 matrix with three equal rows on which the percent immanant of
    hull(w) evaluates to +-1, for w avoiding 321 and 1324 and containing
    2143.  Ones sit on the anti-diagonal, at (1,1) and (n,n), and at the
    four cells (1, i), (n+1-i, 1), (n, i), (n+1-i, n) for
    i = max(w(1), n+1 - w^{-1}(n)); rows 1, n+1-i and n coincide.
    """
    n = len(w)
    i = max(w[0], n + 1 - inverse(w)[n - 1])
    ones = {(r, n + 1 - r) for r in range(1, n + 1)}
    ones |= {(1, 1), (n, n), (1, i), (n + 1 - i, 1), (n + 1 - i, n), (n, i)}
    return tuple(
        tuple(1 if (r, c) in ones else 0 for c in range(1, n + 1))
        for r in range(1, n + 1)
    )


# ---------------------------------------------------------------------------
# Symmetries and the span of percent immanants


def s_transform(f: Immanant) -> Immanant:
    """Move the coefficient of u to u^{-1}."""
    return Immanant(f.n, {inverse(u): c for u, c in f.coeffs.items()})


def t_transform(f: Immanant) -> Immanant:
    """Move the coefficient of u to w0.u.w0."""
    return Immanant(
        f.n, {conjugate_by_longest(u): c for u, c in f.coeffs.items()}
    )


def is_1324_sign_alternating(f: Immanant) -> bool:
    """True iff f(w) = -f(w') on every 1324-adjacent pair; exactly the
    membership test for the span of the percent immanants."""
    limits.check_limit(f.n, limits.max_n(), "sign-alternation check")
    return find_alternation_violation(f) is None


def find_alternation_violation(f: Immanant) -> tuple[Perm, Perm] | None:
    for w, w2 in adjacent_1324_pairs(f.n):
        if f.coeff(w) != -f.coeff(w2):
            return w, w2
    return None


@functools.lru_cache(maxsize=8)
def related_classes(n: int) -> tuple[tuple[Perm, ...], ...]:
    """The partition of S_n by the transitive closure of 1324-adjacency,
    each class sorted, classes ordered by their minimum."""
    limits.check_limit(n, limits.max_n(), "1324-relatedness classes")
    parent: dict[Perm, Perm] = {u: u for u in all_perms(n)}

    def find(u: Perm) -> Perm:
        while parent[u] != u:
            parent[u] = parent[parent[u]]
            u = parent[u]
        return u

    for w, w2 in adjacent_1324_pairs(n):
        ra, rb = find(w), find(w2)
        if ra != rb:
            parent[rb] = ra
    groups: dict[Perm, list[Perm]] = {}
    for u in all_perms(n):
        groups.setdefault(find(u), []).append(u)
    return tuple(
        tuple(sorted(members)) for _, members in sorted(groups.items())
    )


def class_indicator(n: int, members: Iterable[Perm]) -> Immanant:
    """The signed indicator sum over one 1324-relatedness class."""
    return Immanant(n, {u: sign(u) for u in members})


def percent_basis_decompose(f: Immanant) -> list[tuple[Perm, Coeff]]:
    """Write f as sum of coefficient * class_indicator over class
    representatives (the minimum of each class); requires f to be
    1324-sign-alternating.

    >>> percent_basis_decompose(zero_immanant(3))
    []
    """
    violation = find_alternation_violation(f)
    if violation is not None:
        w, w2 = violation
        raise PreconditionError(
            "not in the span of percent immanants: adjacent pair "
            f"{format_perm(w)}, {format_perm(w2)} has coefficients "
            f"{f.coeff(w)}, {f.coeff(w2)}"
        )
    out = []
    for members in related_classes(f.n):
        rep = members[0]
        c = _normalize_coeff(f.coeff(rep) * sign(rep))
        if c:
            out.append((rep, c))
    return out
