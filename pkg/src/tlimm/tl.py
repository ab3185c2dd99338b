"""
The Temperley-Lieb algebra TL_n(2) on non-crossing matchings.

A basis diagram is a perfect non-crossing matching of the 2n vertices
1, ..., n, n', ..., 1'.  Vertex i sits at circular position i and vertex i'
at circular position 2n+1-i, so the circle reads 1, 2, ..., n, n', ..., 1'.
Internally a matching is an involution ``pairing`` on 0-based circular
positions, exactly as a balanced bracket sequence.

Products glue two diagrams along a shared boundary and multiply the
coefficient by 2 for every closed loop formed.  The gluing orientation is a
convention; the one used here is pinned by the test anchor
``beta((2,3,4,1)) == parse_matching("1-3' 2-4' 3-4 1'-2'")`` and is the one
under which every ``beta(w)`` is compatible with the black/white coloring of
w (see :mod:`tlimm.coloring`).
"""

from __future__ import annotations

import dataclasses
import functools
import math
from typing import Iterator

from . import limits
from .errors import PreconditionError
from .perm import (
    Perm,
    avoiding_321,
    is_321_avoiding,
    length,
    reduced_word,
    right_mult_gen,
)


def catalan(n: int) -> int:
    """The nth Catalan number.

    >>> [catalan(n) for n in range(9)]
    [1, 1, 2, 5, 14, 42, 132, 429, 1430]
    """
    return math.comb(2 * n, n) // (n + 1)


def is_noncrossing(pairing: tuple[int, ...]) -> bool:
    """Check that pairing is a fixed-point-free involution whose chords do
    not cross, i.e. a balanced bracket sequence."""
    size = len(pairing)
    if not all(
        0 <= pairing[p] < size and pairing[p] != p and pairing[pairing[p]] == p
        for p in range(size)
    ):
        return False
    stack: list[int] = []
    for p in range(size):
        if pairing[p] > p:
            stack.append(pairing[p])
        elif stack.pop() != p:
            return False
    return True


@dataclasses.dataclass(frozen=True)
class NonCrossingMatching:
    """A perfect non-crossing matching of 1..n and 1'..n'."""

    n: int
    pairing: tuple[int, ...]

    def __post_init__(self):
        assert len(self.pairing) == 2 * self.n
        assert is_noncrossing(self.pairing)
        # Paired circular positions always differ by an odd amount.
        assert all((p - q) % 2 == 1 for p, q in enumerate(self.pairing))

    def __repr__(self):
        return f"NonCrossingMatching({self.n}, {format_matching(self)!r})"

    def pairs(self) -> tuple[tuple[int, int], ...]:
        """The pairs as 0-based circular positions (p, q) with p < q."""
        return tuple(
            (p, q) for p, q in enumerate(self.pairing) if p < q
        )

    def partner_of(self, label: int, primed: bool) -> tuple[int, bool]:
        """The (label, primed) vertex paired with the given one."""
        q = self.pairing[vertex_position(self.n, label, primed)]
        return vertex_of_position(self.n, q)


def vertex_position(n: int, label: int, primed: bool) -> int:
    """0-based circular position of a labelled vertex."""
    if not 1 <= label <= n:
        raise ValueError(f"vertex label {label} out of range for n={n}")
    return (2 * n - label) if primed else (label - 1)


def vertex_of_position(n: int, p: int) -> tuple[int, bool]:
    return (p + 1, False) if p < n else (2 * n - p, True)


def parse_vertex(token: str) -> tuple[int, bool]:
    """Parse "3" or "3'" into (label, primed)."""
    token = token.strip()
    primed = token.endswith("'")
    label = int(token.rstrip("'"))
    return label, primed


def format_vertex(label: int, primed: bool) -> str:
    return f"{label}'" if primed else str(label)


def format_matching(m: NonCrossingMatching) -> str:
    """Space-separated pairs, e.g. "1-3' 2-4' 3-4 1'-2'".

    Within a pair, unprimed vertices precede primed ones and labels ascend;
    pairs are sorted by their first vertex the same way.
    """
    shown = []
    for p, q in m.pairs():
        ends = sorted(
            (vertex_of_position(m.n, p), vertex_of_position(m.n, q)),
            key=lambda v: (v[1], v[0]),
        )
        shown.append(ends)
    shown.sort(key=lambda ends: (ends[0][1], ends[0][0]))
    return " ".join(
        f"{format_vertex(*a)}-{format_vertex(*b)}" for a, b in shown
    )


def parse_matching(text: str, n: int | None = None) -> NonCrossingMatching:
    """Parse the space-separated pair format; n is inferred from the number
    of pairs when not given.

    >>> parse_matching("1-2 1'-2'").pairing
    (1, 0, 3, 2)
    """
    tokens = text.split()
    if n is None:
        n = len(tokens)
    pairing = [-1] * (2 * n)
    for token in tokens:
        left, _, right = token.partition("-")
        p = vertex_position(n, *parse_vertex(left))
        q = vertex_position(n, *parse_vertex(right))
        pairing[p], pairing[q] = q, p
    if -1 in pairing:
        raise ValueError(f"not a perfect matching of 2n={2*n} vertices: {text!r}")
    return NonCrossingMatching(n, tuple(pairing))


@functools.lru_cache(maxsize=1 << 14)
def _matching(n: int, pairing: tuple[int, ...]) -> NonCrossingMatching:
    # Interned constructor: identical diagrams share one object.
    return NonCrossingMatching(n, pairing)


def identity_matching(n: int) -> NonCrossingMatching:
    """Every i paired with i'."""
    return _matching(n, tuple(2 * n - 1 - p for p in range(2 * n)))


def generator(n: int, i: int) -> NonCrossingMatching:
    """The diagram of t_i: cup i-(i+1), cap i'-(i+1)', all else through.

    >>> format_matching(generator(3, 2))
    "1-1' 2-3 2'-3'"
    """
    if not 1 <= i <= n - 1:
        raise PreconditionError(f"generator index {i} out of range for n={n}")
    pairing = [2 * n - 1 - p for p in range(2 * n)]
    pairing[i - 1], pairing[i] = i, i - 1
    pairing[2 * n - i - 1], pairing[2 * n - i] = 2 * n - i, 2 * n - i - 1
    return _matching(n, tuple(pairing))


def glue(x: NonCrossingMatching, y: NonCrossingMatching) -> tuple[NonCrossingMatching, int]:
    """The diagram product x.y and the number of closed loops formed.

    The surviving unprimed boundary is y's, the surviving primed boundary is
    x's; y's primed vertex j' is identified with x's unprimed vertex j.
    """
    if x.n != y.n:
        raise PreconditionError(f"size mismatch: {x.n} vs {y.n}")
    n = x.n
    total = 2 * n
    result = [-1] * total
    seen_mid = [False] * n  # indexed by x's unprimed position

    def walk(on_x: bool, pos: int) -> int:
        while True:
            if on_x:
                pos = x.pairing[pos]
                if pos >= n:
                    return pos
                seen_mid[pos] = True
                on_x, pos = False, total - 1 - pos
            else:
                pos = y.pairing[pos]
                if pos < n:
                    return pos
                mid = total - 1 - pos
                seen_mid[mid] = True
                on_x, pos = True, mid

    for start in range(total):
        if result[start] != -1:
            continue
        end = walk(start >= n, start)
        result[start], result[end] = end, start

    loops = 0
    for mid in range(n):
        if seen_mid[mid]:
            continue
        loops += 1
        pos = mid
        while not seen_mid[pos]:
            seen_mid[pos] = True
            other = x.pairing[pos]
            seen_mid[other] = True
            pos = total - 1 - y.pairing[total - 1 - other]

    return _matching(n, tuple(result)), loops


def _attach_generator(m: NonCrossingMatching, i: int) -> tuple[NonCrossingMatching, int]:
    """m . t_i, a local surgery on m's unprimed boundary at labels i, i+1."""
    p, q = i - 1, i
    a, b = m.pairing[p], m.pairing[q]
    if a == q:
        return m, 1
    pairing = list(m.pairing)
    pairing[p], pairing[q] = q, p
    pairing[a], pairing[b] = b, a
    return _matching(m.n, tuple(pairing)), 0


@dataclasses.dataclass
class TLElement:
    """An exact-integer linear combination of non-crossing matchings."""

    n: int
    terms: dict[NonCrossingMatching, int]

    def __init__(self, n: int, terms: dict[NonCrossingMatching, int]):
        self.n = n
        self.terms = {}
        for m, c in terms.items():
            if m.n != n:
                raise PreconditionError(f"diagram size {m.n} in TL element of size {n}")
            if c:
                self.terms[m] = c

    @classmethod
    def one(cls, n: int) -> TLElement:
        return cls(n, {identity_matching(n): 1})

    @classmethod
    def from_matching(cls, m: NonCrossingMatching) -> TLElement:
        return cls(m.n, {m: 1})

    def coeff(self, m: NonCrossingMatching) -> int:
        return self.terms.get(m, 0)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TLElement)
            and self.n == other.n
            and self.terms == other.terms
        )

    def __add__(self, other: TLElement) -> TLElement:
        if self.n != other.n:
            raise PreconditionError(f"size mismatch: {self.n} vs {other.n}")
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, 0) + c
        return TLElement(self.n, terms)

    def __neg__(self) -> TLElement:
        return TLElement(self.n, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: TLElement) -> TLElement:
        return self + (-other)

    def scaled(self, c: int) -> TLElement:
        return TLElement(self.n, {m: c * v for m, v in self.terms.items()})

    def __mul__(self, other: TLElement) -> TLElement:
        """Bilinear extension of diagram gluing, with loops worth 2 each."""
        if not isinstance(other, TLElement):
            return NotImplemented
        if self.n != other.n:
            raise PreconditionError(f"size mismatch: {self.n} vs {other.n}")
        terms: dict[NonCrossingMatching, int] = {}
        for mx, cx in self.terms.items():
            for my, cy in other.terms.items():
                m, loops = glue(mx, my)
                terms[m] = terms.get(m, 0) + cx * cy * (1 << loops)
        return TLElement(self.n, terms)

    def _times_theta_gen(self, i: int) -> TLElement:
        """self . (t_i - 1), via the local surgery."""
        terms: dict[NonCrossingMatching, int] = {}
        for m, c in self.terms.items():
            glued, loops = _attach_generator(m, i)
            terms[glued] = terms.get(glued, 0) + c * (1 << loops)
        for m, c in self.terms.items():
            terms[m] = terms.get(m, 0) - c
        return TLElement(self.n, terms)


def t(n: int, i: int) -> TLElement:
    """The generator t_i as an element."""
    return TLElement.from_matching(generator(n, i))


def theta(u: Perm) -> TLElement:
    """The image of u under the algebra map s_i -> t_i - 1.

    Computed as the left-to-right product of (t_i - 1) over a reduced word
    of u; independent of the choice of word.

    >>> theta((2, 1)).coeff(generator(2, 1))
    1
    >>> theta((2, 1)).coeff(identity_matching(2))
    -1
    """
    elem = TLElement.one(len(u))
    for i in reduced_word(u):
        elem = elem._times_theta_gen(i)
    return elem


def beta(w: Perm) -> NonCrossingMatching:
    """The matching attached to a 321-avoiding w: the diagram of the product
    of the t_i over a reduced word of w.

    >>> format_matching(beta((2, 3, 4, 1)))
    "1-3' 2-4' 3-4 1'-2'"
    """
    if not is_321_avoiding(w):
        raise PreconditionError(f"{w} contains the pattern 321")
    m = identity_matching(len(w))
    for i in reduced_word(w):
        m, loops = _attach_generator(m, i)
        assert loops == 0
    return m


def beta_inv(m: NonCrossingMatching) -> Perm:
    """The unique 321-avoiding w with beta(w) = m.

    Reads the permutation off the pairing structure: in beta(w) each pair
    joins a vertex of weak-excedance type to one of deficiency type, with the
    weak side carrying the smaller label (ties are fixed points).  Collecting
    the weak positions P and the values V = w(P) determines w, since both
    subsequences of a 321-avoiding permutation are increasing.

    >>> beta_inv(parse_matching("1-2 1'-2'"))
    (2, 1)
    """
    n = m.n
    weak_positions = []
    weak_values = []
    for p, q in m.pairs():
        (i, i_primed) = vertex_of_position(n, p)
        (j, j_primed) = vertex_of_position(n, q)
        if not i_primed and not j_primed:
            weak_positions.append(min(i, j))
        elif i_primed and j_primed:
            weak_values.append(max(i, j))
        else:
            pos, val = (j, i) if i_primed else (i, j)
            if pos <= val:
                weak_positions.append(pos)
                weak_values.append(val)
    weak_positions.sort()
    weak_values.sort()
    rest_positions = sorted(set(range(1, n + 1)) - set(weak_positions))
    rest_values = sorted(set(range(1, n + 1)) - set(weak_values))
    word = [0] * n
    for pos, val in zip(weak_positions, weak_values):
        word[pos - 1] = val
    for pos, val in zip(rest_positions, rest_values):
        word[pos - 1] = val
    return tuple(word)


def all_matchings(n: int) -> tuple[NonCrossingMatching, ...]:
    """All Catalan(n) non-crossing matchings of 2n vertices."""
    return _all_matchings_cached(n)


@functools.lru_cache(maxsize=16)
def _all_matchings_cached(n: int) -> tuple[NonCrossingMatching, ...]:
    out = []
    pairing = [-1] * (2 * n)

    def fill(free: list[int]) -> Iterator[None]:
        if not free:
            yield
            return
        p = free[0]
        # Pairing p with free[k] splits the rest into an inside and an
        # outside arc, each of which must be matched within itself.
        for k in range(1, len(free), 2):
            q = free[k]
            pairing[p], pairing[q] = q, p
            for _ in fill(free[1:k]):
                yield from fill(free[k + 1 :])

    for _ in fill(list(range(2 * n))):
        out.append(_matching(n, tuple(pairing)))
    return tuple(out)


def theta_table(n: int, limit: int | None = None) -> dict[Perm, TLElement]:
    """theta(u) for every u in S_n, built along the weak order so each entry
    costs a single generator multiplication."""
    if limit is None:
        limit = limits.theta_max_n()
    limits.check_limit(n, limit, "theta table")
    return dict(_theta_table_cached(n))


@functools.lru_cache(maxsize=4)
def _theta_table_cached(n: int) -> tuple[tuple[Perm, TLElement], ...]:
    from .perm import all_perms

    by_length = sorted(all_perms(n), key=lambda u: (length(u), u))
    table: dict[Perm, TLElement] = {}
    for u in by_length:
        descent = next((i for i in range(1, n) if u[i - 1] > u[i]), None)
        if descent is None:
            table[u] = TLElement.one(n)
        else:
            shorter = right_mult_gen(u, descent)
            table[u] = table[shorter]._times_theta_gen(descent)
    return tuple(table.items())


def f_coeff(w: Perm, u: Perm) -> int:
    """The coefficient of beta(w) in theta(u).

    >>> f_coeff((2, 1, 4, 3), (4, 3, 2, 1))
    2
    """
    if len(w) != len(u):
        raise PreconditionError(f"size mismatch: {len(w)} vs {len(u)}")
    return theta(u).coeff(beta(w))


def f_coeff_from_table(w: Perm, table: dict[Perm, TLElement]) -> dict[Perm, int]:
    """All coefficients f_w(u) at once, given a precomputed theta table."""
    target = beta(w)
    return {u: elem.coeff(target) for u, elem in table.items() if elem.coeff(target)}


def enumerate_321_avoiding(n: int) -> tuple[Perm, ...]:
    """Alias kept close to the bijection: same set as avoiding_321(n)."""
    return avoiding_321(n)
