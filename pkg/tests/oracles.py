"""Independent brute-force oracles used to pin expected values.

Everything here is deliberately naive: plain subset scans, enumeration of
all perfect matchings with a quadratic crossing check, and dictionary
lookups built by exhaustive enumeration.  The library must agree with these
on every desk-scale input.
"""

from __future__ import annotations

import functools
import itertools

from tlimm import perm, tl


def brute_contains_pattern(w, v) -> bool:
    """Plain subset scan over all position subsets."""
    for positions in itertools.combinations(range(len(w)), len(v)):
        values = [w[p] for p in positions]
        order = sorted(values)
        if tuple(order.index(x) + 1 for x in values) == v:
            return True
    return False


def brute_all_matchings(n: int) -> set[tuple[int, ...]]:
    """All perfect matchings of 2n points, filtered by the quadratic
    non-crossing definition; returned as pairing tuples."""
    out = set()

    def rec(pairing: dict[int, int], free: list[int]):
        if not free:
            chords = [(p, q) for p, q in pairing.items() if p < q]
            for (a, b), (c, d) in itertools.combinations(chords, 2):
                if a < c < b < d or c < a < d < b:
                    break
            else:
                out.add(tuple(pairing[p] for p in range(2 * n)))
            return
        p = free[0]
        for q in free[1:]:
            pairing[p], pairing[q] = q, p
            rec(pairing, [x for x in free if x not in (p, q)])
            del pairing[p], pairing[q]

    rec({}, list(range(2 * n)))
    return out


@functools.lru_cache(maxsize=None)
def beta_lookup(n: int):
    """Enumeration-based inverse of beta: matching -> permutation."""
    table = {}
    for w in itertools.permutations(range(1, n + 1)):
        if not brute_contains_pattern(w, (3, 2, 1)):
            table[tl.beta(w)] = w
    return table


def brute_bruhat_leq(u, v) -> bool:
    """Bruhat order by greedy chains of length-increasing transpositions."""
    if u == v:
        return True
    if perm.length(u) >= perm.length(v):
        return False
    n = len(u)
    for i in range(1, n):
        for j in range(i + 1, n + 1):
            if u[i - 1] < u[j - 1]:
                bigger = perm.compose(u, perm.transposition(n, i, j))
                if perm.length(bigger) == perm.length(u) + 1 and brute_bruhat_leq(
                    bigger, v
                ):
                    return True
    return False
