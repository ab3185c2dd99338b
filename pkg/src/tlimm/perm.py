"""
Permutations of [n] = {1, ..., n} in one-line notation.

A permutation w is a tuple of ints (w(1), ..., w(n)); values and positions
are both 1-based throughout the public interface.  The text format is a
compact digit string for n <= 9 ("2143") and comma-separated otherwise
("2,1,4,3"); both are accepted by :func:`parse_perm`.

Products compose left-to-right as maps: (v * w)(i) = v(w(i)).
"""

from __future__ import annotations

import functools
import itertools
from typing import Iterable, Iterator, Sequence

from .errors import PreconditionError

Perm = tuple[int, ...]

# Blocks of a permutation: pairs (value_rank, length), in position order.
BlockStructure = tuple[tuple[int, int], ...]


def is_perm(seq: Sequence[int]) -> bool:
    """Return True if seq is a rearrangement of 1..n where n = len(seq)."""
    return sorted(seq) == list(range(1, len(seq) + 1))


def perm(seq: Iterable[int]) -> Perm:
    """Coerce seq to a validated permutation tuple.

    >>> perm([2, 1, 4, 3])
    (2, 1, 4, 3)
    """
    word = tuple(seq)
    if not is_perm(word):
        raise ValueError(f"not a permutation of 1..{len(word)}: {word}")
    return word


def parse_perm(text: str) -> Perm:
    """Parse "2143" or "2,1,4,3" into a permutation tuple.

    >>> parse_perm("2143")
    (2, 1, 4, 3)
    >>> parse_perm("10,2,3,4,5,6,7,8,9,1")[0]
    10
    """
    text = text.strip()
    if not text:
        raise ValueError("empty permutation string")
    if "," in text:
        parts = [p.strip() for p in text.split(",")]
    else:
        parts = list(text)
    try:
        return perm(int(p) for p in parts)
    except ValueError as exc:
        raise ValueError(f"cannot parse permutation from {text!r}: {exc}") from None


def format_perm(w: Perm) -> str:
    """Format a permutation compactly.

    >>> format_perm((2, 1, 4, 3))
    '2143'
    """
    if len(w) <= 9:
        return "".join(str(x) for x in w)
    return ",".join(str(x) for x in w)


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def all_perms(n: int) -> Iterator[Perm]:
    """All of S_n in lexicographic order."""
    return itertools.permutations(range(1, n + 1))


def _check_same_size(v: Perm, w: Perm) -> None:
    if len(v) != len(w):
        raise PreconditionError(f"size mismatch: {len(v)} vs {len(w)}")


def compose(v: Perm, w: Perm) -> Perm:
    """The product v.w acting as (v.w)(i) = v(w(i)).

    >>> compose((2, 1, 3), (1, 3, 2))
    (2, 3, 1)
    """
    _check_same_size(v, w)
    return tuple(v[w[i] - 1] for i in range(len(w)))


def inverse(w: Perm) -> Perm:
    """The inverse permutation.

    >>> inverse((2, 3, 4, 1))
    (4, 1, 2, 3)
    """
    result = [0] * len(w)
    for i, x in enumerate(w):
        result[x - 1] = i + 1
    return tuple(result)


def longest_word(n: int) -> Perm:
    """The order-reversing permutation n, n-1, ..., 1.

    >>> longest_word(4)
    (4, 3, 2, 1)
    """
    if n < 1:
        raise ValueError("n must be positive")
    return tuple(range(n, 0, -1))


def conjugate_by_longest(w: Perm) -> Perm:
    """w0 . w . w0, i.e. i -> n+1 - w(n+1-i)."""
    n = len(w)
    return tuple(n + 1 - w[n - 1 - i] for i in range(n))


def transposition(n: int, i: int, j: int) -> Perm:
    """The transposition (i j) in S_n."""
    assert 1 <= i <= n and 1 <= j <= n
    word = list(range(1, n + 1))
    word[i - 1], word[j - 1] = word[j - 1], word[i - 1]
    return tuple(word)


def length(w: Perm) -> int:
    """Coxeter length = number of inversions.

    >>> length((2, 1, 4, 3))
    2
    """
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def sign(w: Perm) -> int:
    """(-1)^length(w)."""
    return -1 if length(w) % 2 else 1


def right_mult_gen(w: Perm, i: int) -> Perm:
    """w . s_i: swap the entries in positions i and i+1 (1-based)."""
    assert 1 <= i < len(w)
    word = list(w)
    word[i - 1], word[i] = word[i], word[i - 1]
    return tuple(word)


def reduced_word(w: Perm) -> tuple[int, ...]:
    """A reduced word (i_1, ..., i_k) with s_{i_1} . s_{i_2} ... s_{i_k} = w.

    Deterministic: the word is produced by selection sort, repeatedly walking
    the value 1, then 2, ... leftward to its place via adjacent swaps.

    >>> reduced_word((2, 3, 4, 1))
    (1, 2, 3)
    >>> reduced_word((2, 1))
    (1,)
    """
    word = list(w)
    swaps: list[int] = []
    for value in range(1, len(w) + 1):
        pos = word.index(value) + 1
        while pos > value:
            word[pos - 2], word[pos - 1] = word[pos - 1], word[pos - 2]
            swaps.append(pos - 1)
            pos -= 1
    return tuple(reversed(swaps))


def compose_word(n: int, word: Iterable[int]) -> Perm:
    """Multiply out a word in the generators, left to right."""
    result = identity(n)
    for i in word:
        result = right_mult_gen(result, i)
    return result


def restriction(w: Perm, positions: Iterable[int]) -> Perm:
    """The pattern of w on a set of positions, rank-compressed to a permutation.

    >>> restriction((3, 1, 5, 2, 4), {2, 4, 5})
    (1, 2, 3)
    >>> restriction((5, 6, 1, 2, 3, 7, 8, 4), {1, 2, 3})
    (2, 3, 1)
    """
    pos = sorted(set(positions))
    if not pos:
        raise PreconditionError("restriction to an empty position set")
    if pos[0] < 1 or pos[-1] > len(w):
        raise PreconditionError(f"positions {pos} out of range for n={len(w)}")
    values = [w[p - 1] for p in pos]
    order = sorted(values)
    return tuple(order.index(v) + 1 for v in values)


@functools.lru_cache(maxsize=1 << 16)
def contains_pattern(w: Perm, v: Perm) -> bool:
    """True iff some set of positions of w carries the pattern v.

    >>> contains_pattern((3, 1, 5, 2, 4), (1, 2, 3))
    True
    >>> contains_pattern((3, 1, 5, 2, 4), (3, 2, 1))
    False
    """
    n, m = len(w), len(v)
    if m > n:
        raise PreconditionError(f"pattern of length {m} in host of length {n}")
    if m == 0:
        return True

    def extend(start: int, chosen: tuple[int, ...]) -> bool:
        k = len(chosen)
        if k == m:
            return True
        for p in range(start, n - (m - k) + 1):
            x = w[p]
            if all((x > w[q]) == (v[k] > v[j]) for j, q in enumerate(chosen)):
                if extend(p + 1, chosen + (p,)):
                    return True
        return False

    return extend(0, ())


def avoids(w: Perm, *patterns: Perm) -> bool:
    """True iff w contains none of the given patterns."""
    return not any(
        len(p) <= len(w) and contains_pattern(w, p) for p in patterns
    )


PATTERN_321 = (3, 2, 1)


def is_321_avoiding(w: Perm) -> bool:
    return avoids(w, PATTERN_321)


@functools.lru_cache(maxsize=16)
def avoiding_321(n: int) -> tuple[Perm, ...]:
    """All 321-avoiding permutations of [n], lexicographically sorted."""
    return tuple(w for w in all_perms(n) if is_321_avoiding(w))


def rank_table(w: Perm) -> list[list[int]]:
    """r[i][j] = |w([1,i]) intersected with [1,j]| for 0 <= i, j <= n."""
    n = len(w)
    r = [[0] * (n + 1) for _ in range(n + 1)]
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            r[i][j] = r[i - 1][j] + (1 if w[i - 1] <= j else 0)
    return r


def bruhat_leq(u: Perm, v: Perm) -> bool:
    """Bruhat order via the rank comparison: u <= v iff every rank of u
    dominates the corresponding rank of v.

    >>> bruhat_leq((1, 4, 2, 3), (2, 4, 3, 1))
    True
    >>> bruhat_leq((2, 1, 4, 3), (1, 2, 3, 4))
    False
    """
    _check_same_size(u, v)
    ru, rv = rank_table(u), rank_table(v)
    n = len(u)
    return all(ru[i][j] >= rv[i][j] for i in range(1, n + 1) for j in range(1, n + 1))


def block_structure(w: Perm) -> BlockStructure:
    """The coarsest decomposition of the one-line notation into maximal runs
    of consecutive ascending integers, as (value_rank, length) pairs.

    >>> block_structure((5, 6, 1, 2, 3, 7, 8, 4))
    ((3, 2), (1, 3), (4, 2), (2, 1))
    """
    runs: list[tuple[int, int]] = []  # (starting value, length)
    i = 0
    while i < len(w):
        j = i
        while j + 1 < len(w) and w[j + 1] == w[j] + 1:
            j += 1
        runs.append((w[i], j - i + 1))
        i = j + 1
    by_value = sorted(start for start, _ in runs)
    return tuple((by_value.index(start) + 1, size) for start, size in runs)


def is_1324_adjacent(w: Perm, w2: Perm) -> bool:
    """True iff w and w2 differ by swapping two values that sit in the middle
    of a common increasing frame: positions c < a < b < d with the values at
    c and d below and above both swapped values.

    >>> is_1324_adjacent((1, 4, 2, 3, 5), (1, 3, 2, 4, 5))
    True
    >>> is_1324_adjacent((2, 1, 4, 3), (2, 4, 1, 3))
    False
    """
    _check_same_size(w, w2)
    diff = [i for i in range(len(w)) if w[i] != w2[i]]
    if len(diff) != 2:
        return False
    a, b = diff
    if w[a] != w2[b] or w[b] != w2[a]:
        return False
    lo, hi = min(w[a], w[b]), max(w[a], w[b])
    return any(w[c] < lo for c in range(a)) and any(
        w[d] > hi for d in range(b + 1, len(w))
    )


@functools.lru_cache(maxsize=8)
def adjacent_1324_pairs(n: int) -> tuple[tuple[Perm, Perm], ...]:
    """Every unordered 1324-adjacent pair in S_n, once each.

    Each pair is listed from the side with the increasing middle.
    """
    pairs = []
    for w in all_perms(n):
        prefix_min = []
        m = n + 1
        for x in w:
            prefix_min.append(m)
            m = min(m, x)
        suffix_max = []
        m = 0
        for x in reversed(w):
            suffix_max.append(m)
            m = max(m, x)
        suffix_max.reverse()
        for a in range(n):
            if prefix_min[a] >= w[a]:
                continue
            for b in range(a + 1, n):
                if w[a] < w[b] and suffix_max[b] > w[b]:
                    other = list(w)
                    other[a], other[b] = other[b], other[a]
                    pairs.append((w, tuple(other)))
    return tuple(pairs)
