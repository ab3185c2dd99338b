"""
Exhaustive verification suites.

Each suite checks one exact identity over a whole desk-scale range and
returns a :class:`VerificationReport`; a failure records the claim, the
witness input and the expected/actual values.  Suites A1-A10 are the
acceptance gate; ``run_suite`` runs one suite at one size and
``default_sizes`` gives the per-suite size ranges.
"""

from __future__ import annotations

import dataclasses
import itertools
import random
import time
from fractions import Fraction
from typing import Callable, Iterable

from . import classify, coloring, immanant, perm, tl
from .classify import PATTERN_1324, PATTERN_2143
from .perm import Perm


@dataclasses.dataclass
class Failure:
    claim: str
    witness: str
    expected: str
    actual: str


@dataclasses.dataclass
class VerificationReport:
    suite: str
    n: int
    checks: int
    failures: list[Failure]
    elapsed: float

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        status = "ok" if self.ok else f"{len(self.failures)} FAILED"
        return (
            f"{self.suite} n={self.n}: {self.checks} checks, "
            f"{status}, {self.elapsed:.2f}s"
        )

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "n": self.n,
            "checks": self.checks,
            "failures": [dataclasses.asdict(f) for f in self.failures],
            "elapsed": round(self.elapsed, 3),
        }


class _Recorder:
    def __init__(self):
        self.checks = 0
        self.failures: list[Failure] = []

    def check(self, claim: str, witness: str, expected, actual) -> None:
        self.checks += 1
        if expected != actual:
            self.failures.append(
                Failure(claim, witness, repr(expected), repr(actual))
            )


def _report(suite: str, n: int, body: Callable[[_Recorder], None]) -> VerificationReport:
    rec = _Recorder()
    start = time.perf_counter()
    body(rec)
    return VerificationReport(
        suite, n, rec.checks, rec.failures, time.perf_counter() - start
    )


def _applicable_two_case(n: int) -> list[Perm]:
    """321- and 1324-avoiding permutations containing 2143."""
    return [
        w
        for w in perm.avoiding_321(n)
        if perm.avoids(w, PATTERN_1324) and not perm.avoids(w, PATTERN_2143)
    ]


def suite_a1(n: int) -> VerificationReport:
    """Single-percent classification: tl_immanant(w) equals
    sign(w) * percent(hull(w)) exactly when w avoids 1324 and 2143."""

    def body(rec: _Recorder) -> None:
        imms = immanant.all_tl_immanants(n)
        for w in perm.avoiding_321(n):
            lhs = imms[w]
            rhs = immanant.percent_immanant(immanant.hull(w)).scaled(perm.sign(w))
            rec.check(
                "one-percent iff avoids 1324 and 2143",
                perm.format_perm(w),
                perm.avoids(w, PATTERN_1324, PATTERN_2143),
                lhs == rhs,
            )

    return _report("A1", n, body)


def suite_a2(n: int) -> VerificationReport:
    """Two-percent classification: decompose(w) is non-none iff w avoids the
    five forbidden patterns iff tl_immanant(w) is 1324-sign-alternating, and
    the produced shape sum matches exactly."""

    def body(rec: _Recorder) -> None:
        imms = immanant.all_tl_immanants(n)
        for w in perm.avoiding_321(n):
            d = classify.decompose(w, validate=False)
            ok_patterns = classify.avoids_main_patterns(w)
            alternating = immanant.is_1324_sign_alternating(imms[w])
            rec.check(
                "decomposable iff avoids forbidden patterns",
                perm.format_perm(w), ok_patterns, d.kind != "none",
            )
            rec.check(
                "decomposable iff sign-alternating",
                perm.format_perm(w), ok_patterns, alternating,
            )
            if d.kind != "none":
                total = immanant.zero_immanant(n)
                for s in d.shapes:
                    total = total + immanant.percent_immanant(s)
                rec.check(
                    "shape sum equals signed immanant",
                    perm.format_perm(w), imms[w].scaled(d.sign), total,
                )

    return _report("A2", n, body)


def suite_a3(n: int, samples: int = 100_000, seed: int = 20_433) -> VerificationReport:
    """Closed-form coefficients agree with the Temperley-Lieb expansion:
    exhaustive for n <= 6, sampled at n = 7."""

    def body(rec: _Recorder) -> None:
        table = tl.theta_table(n)
        applicable = [
            w for w in perm.avoiding_321(n) if perm.avoids(w, PATTERN_1324)
        ]
        targets = {w: tl.beta(w) for w in applicable}
        if n <= 6:
            for w in applicable:
                for u, elem in table.items():
                    rec.check(
                        "closed form equals expansion coefficient",
                        f"w={perm.format_perm(w)} u={perm.format_perm(u)}",
                        elem.coeff(targets[w]),
                        classify.closed_form_coeff(w, u),
                    )
        else:
            rng = random.Random(seed)
            universe = list(table)
            for _ in range(samples):
                w = applicable[rng.randrange(len(applicable))]
                u = universe[rng.randrange(len(universe))]
                rec.check(
                    "closed form equals expansion coefficient (sampled)",
                    f"w={perm.format_perm(w)} u={perm.format_perm(u)}",
                    table[u].coeff(targets[w]),
                    classify.closed_form_coeff(w, u),
                )

    return _report("A3", n, body)


def suite_a4(n: int) -> VerificationReport:
    """Complementary minors expand into compatible Temperley-Lieb immanants:
    (-1)^(s(I)+s(J)) CM_{I,J} = sum of Imm_w over compatible w."""

    def body(rec: _Recorder) -> None:
        imms = immanant.all_tl_immanants(n)
        for k in range(n + 1):
            for I in itertools.combinations(range(1, n + 1), k):
                for J in itertools.combinations(range(1, n + 1), k):
                    lhs = immanant.cm_immanant(n, I, J).scaled(
                        immanant.subset_sign(I) * immanant.subset_sign(J)
                    )
                    rhs = immanant.zero_immanant(n)
                    for w in coloring.compatible_permutations(
                        coloring.make_coloring(n, I, J)
                    ):
                        rhs = rhs + imms[w]
                    rec.check(
                        "signed CM equals compatible immanant sum",
                        f"I={set(I) or '{}'} J={set(J) or '{}'}",
                        lhs, rhs,
                    )

    return _report("A4", n, body)


def suite_a5(n: int) -> VerificationReport:
    """Coefficient symmetry: f_w(u) = f_{w^-1}(u^-1) = f_{w0 w w0}(w0 u w0)."""

    def body(rec: _Recorder) -> None:
        table = tl.theta_table(n)
        targets = {w: tl.beta(w) for w in perm.avoiding_321(n)}
        for w in perm.avoiding_321(n):
            bw = targets[w]
            bwi = targets[perm.inverse(w)]
            bwc = targets[perm.conjugate_by_longest(w)]
            for u in perm.all_perms(n):
                value = table[u].coeff(bw)
                rec.check(
                    "f is inverse-symmetric",
                    f"w={perm.format_perm(w)} u={perm.format_perm(u)}",
                    value, table[perm.inverse(u)].coeff(bwi),
                )
                rec.check(
                    "f is w0-conjugation-symmetric",
                    f"w={perm.format_perm(w)} u={perm.format_perm(u)}",
                    value, table[perm.conjugate_by_longest(u)].coeff(bwc),
                )

    return _report("A5", n, body)


def suite_a6(n: int) -> VerificationReport:
    """The matching bijection: 321-avoiding permutations, non-crossing
    matchings and the Catalan number all agree, with beta a bijection."""

    CATALAN = (1, 1, 2, 5, 14, 42, 132, 429, 1430)

    def body(rec: _Recorder) -> None:
        avoiders = perm.avoiding_321(n)
        matchings = tl.all_matchings(n)
        rec.check("Catalan many avoiders", f"n={n}", CATALAN[n], len(avoiders))
        rec.check("Catalan many matchings", f"n={n}", CATALAN[n], len(matchings))
        images = {tl.beta(w) for w in avoiders}
        rec.check("beta is injective", f"n={n}", len(avoiders), len(images))
        rec.check("beta is onto the matchings", f"n={n}", set(matchings), images)
        for w in avoiders:
            rec.check(
                "beta round trip", perm.format_perm(w), w, tl.beta_inv(tl.beta(w))
            )

    return _report("A6", n, body)


def _compatible_colorings(m: tl.NonCrossingMatching) -> Iterable[tuple[bool, ...]]:
    """All 2^n colorings (True = black, by circular position) making every
    pair of m bichromatic."""
    pairs = m.pairs()
    for bits in itertools.product((False, True), repeat=len(pairs)):
        colors = [False] * (2 * m.n)
        for (p, q), black_first in zip(pairs, bits):
            colors[p], colors[q] = black_first, not black_first
        yield tuple(colors)


def _general_conditions(colors: tuple[bool, ...], m: tl.NonCrossingMatching,
                        a: int, b: int, c: int, d: int, e: int) -> bool:
    n = a + b + c + d + e
    zone1 = range(0, b + c + e)
    zone2 = range(b + c + e, a + 2 * b + c + e)
    zone3 = range(a + 2 * b + c + e, a + b + e + n)
    zone4 = range(a + b + e + n, 2 * n)
    if not all(colors[p] for p in zone1):
        return False
    if not all(not colors[p] for p in zone3):
        return False
    if sum(colors[p] for p in zone2) != a or sum(not colors[p] for p in zone2) != b:
        return False
    if sum(colors[p] for p in zone4) != d or sum(not colors[p] for p in zone4) != c:
        return False
    z2, z4 = set(zone2), set(zone4)
    for p, q in m.pairs():
        if (p in z2 and q in z2) or (p in z4 and q in z4):
            return False
    return True


def _case1_conditions(colors: tuple[bool, ...], m: tl.NonCrossingMatching,
                      a: int, b: int, c: int, d: int, e: int) -> bool:
    n = a + b + c + d + e
    pos_u = lambda i: i - 1
    pos_p = lambda i: 2 * n - i
    if not all(colors[pos_u(i)] for i in range(a + 1, n - d + 1)):
        return False
    if not all(not colors[pos_p(i)] for i in range(b + 1, n - c + 1)):
        return False
    zone1 = {pos_u(i) for i in range(1, a + 1)} | {pos_p(i) for i in range(1, b + 1)}
    zone2 = {pos_u(i) for i in range(n - d + 1, n + 1)} | {
        pos_p(i) for i in range(n - c + 1, n + 1)
    }
    if sum(colors[p] for p in zone1) != a or sum(not colors[p] for p in zone1) != b:
        return False
    if sum(colors[p] for p in zone2) != d or sum(not colors[p] for p in zone2) != c:
        return False
    for p, q in m.pairs():
        if (p in zone1 and q in zone1) or (p in zone2 and q in zone2):
            return False
    return True


def _case2_conditions(colors: tuple[bool, ...], m: tl.NonCrossingMatching,
                      a: int, e: int, b: int, c: int, f: int, d: int) -> bool:
    n = a + e + b + c + f + d
    pos_u = lambda i: i - 1
    pos_p = lambda i: 2 * n - i
    if not all(colors[pos_u(i)] for i in range(1, a + e + 1)):
        return False
    if not all(not colors[pos_u(i)] for i in range(a + e + b + c + 1, n + 1)):
        return False
    if not all(colors[pos_p(i)] for i in range(1, b + f + 1)):
        return False
    if not all(not colors[pos_p(i)] for i in range(b + f + a + d + 1, n + 1)):
        return False
    mid_u = {pos_u(i) for i in range(a + e + 1, a + e + b + c + 1)}
    mid_p = {pos_p(i) for i in range(b + f + 1, b + f + a + d + 1)}
    if sum(colors[p] for p in mid_u) != c or sum(not colors[p] for p in mid_u) != b:
        return False
    if sum(colors[p] for p in mid_p) != d or sum(not colors[p] for p in mid_p) != a:
        return False
    for p, q in m.pairs():
        if (p in mid_u and q in mid_u) or (p in mid_p and q in mid_p):
            return False
    return True


def _brute_solutions(n: int, predicate) -> list[tuple[tuple[bool, ...], tl.NonCrossingMatching]]:
    out = []
    for m in tl.all_matchings(n):
        for colors in _compatible_colorings(m):
            if predicate(colors, m):
                out.append((colors, m))
    return out


def _compositions(total: int, parts: int, minima: tuple[int, ...]) -> Iterable[tuple[int, ...]]:
    if parts == 1:
        if total >= minima[0]:
            yield (total,)
        return
    for first in range(minima[0], total + 1):
        for rest in _compositions(total - first, parts - 1, minima[1:]):
            yield (first,) + rest


def suite_a7(n: int) -> VerificationReport:
    """Unique-matching constructions match brute force: every zone-condition
    instance has exactly one (coloring, matching) solution and it is the
    constructed one, which in turn equals beta of the built permutation."""

    def body(rec: _Recorder) -> None:
        for a, b, c, d, e in _compositions(n, 5, (0, 0, 0, 0, 0)):
            col, m = coloring.unique_matching_general(a, b, c, d, e)
            expected = [
                (tuple(ch == "B" for ch in col.colors), m)
            ]
            found = _brute_solutions(
                n, lambda colors, mm, t=(a, b, c, d, e): _general_conditions(colors, mm, *t)
            )
            rec.check(
                "general zone instance has the one constructed solution",
                f"(a,b,c,d,e)=({a},{b},{c},{d},{e})", expected, found,
            )
        for a, b, c, d, e in _compositions(n, 5, (1, 1, 1, 1, 0)):
            col, m = coloring.unique_matching_case1(a, b, c, d, e)
            circ = col.circular()
            expected = [(tuple(ch == "B" for ch in circ.colors), m)]
            found = _brute_solutions(
                n, lambda colors, mm, t=(a, b, c, d, e): _case1_conditions(colors, mm, *t)
            )
            rec.check(
                "case-1 zone instance has the one constructed solution",
                f"(a,b,c,d,e)=({a},{b},{c},{d},{e})", expected, found,
            )
            rec.check(
                "case-1 matching is beta of the built permutation",
                f"(a,b,c,d,e)=({a},{b},{c},{d},{e})",
                tl.beta(classify.build_case1(a, b, e, c, d)), m,
            )
        for a, e, b, c, f, d in _compositions(n, 6, (1, 0, 1, 1, 0, 1)):
            if max(e, f) < 1:
                continue
            col, m = coloring.unique_matching_case2(a, e, b, c, f, d)
            circ = col.circular()
            expected = [(tuple(ch == "B" for ch in circ.colors), m)]
            found = _brute_solutions(
                n, lambda colors, mm, t=(a, e, b, c, f, d): _case2_conditions(colors, mm, *t)
            )
            rec.check(
                "case-2 zone instance has the one constructed solution",
                f"(a,e,b,c,f,d)=({a},{e},{b},{c},{f},{d})", expected, found,
            )
            rec.check(
                "case-2 matching is beta of the built permutation",
                f"(a,e,b,c,f,d)=({a},{e},{b},{c},{f},{d})",
                tl.beta(classify.build_case2(a, e, b, c, f, d)), m,
            )

    return _report("A7", n, body)


def suite_a8(n: int) -> VerificationReport:
    """Anti-diagonal coefficients: the closed form matches |f_w(w0)|, with
    the two fixed anchors at n = 4 and n = 6."""

    def body(rec: _Recorder) -> None:
        w0 = perm.longest_word(n)
        expansion = tl.theta(w0)
        for w in _applicable_two_case(n):
            rec.check(
                "closed form matches |f_w(w0)|",
                perm.format_perm(w),
                abs(expansion.coeff(tl.beta(w))),
                classify.antidiag_coeff(w),
            )
        if n == 4:
            rec.check("anchor f_2143(4321)", "2143",
                      2, tl.f_coeff((2, 1, 4, 3), (4, 3, 2, 1)))
        if n == 6:
            rec.check("anchor |f_231564(654321)|", "231564",
                      3, abs(tl.f_coeff((2, 3, 1, 5, 6, 4), (6, 5, 4, 3, 2, 1))))

    return _report("A8", n, body)


def suite_a9(n: int, seed: int = 94_711) -> VerificationReport:
    """1324-relatedness classes coincide with hull fibers, and random span
    elements decompose and reconstruct exactly (n <= 5)."""

    def body(rec: _Recorder) -> None:
        classes = immanant.related_classes(n)
        fibers: dict[immanant.SkewShape, set[Perm]] = {}
        for w in perm.all_perms(n):
            fibers.setdefault(immanant.hull(w), set()).add(w)
        rec.check(
            "classes equal hull fibers",
            f"n={n}",
            {frozenset(v) for v in fibers.values()},
            {frozenset(c) for c in classes},
        )
        if n <= 5:
            rng = random.Random(seed + n)

            def random_shape() -> immanant.SkewShape:
                lam = sorted((rng.randint(0, n) for _ in range(n)), reverse=True)
                raw = sorted((rng.randint(0, n) for _ in range(n)), reverse=True)
                mu = [min(r, l) for r, l in zip(raw, lam)]
                return immanant.SkewShape(n, tuple(lam), tuple(mu))

            for trial in range(25):
                f = immanant.zero_immanant(n)
                for _ in range(3):
                    f = f + immanant.percent_immanant(random_shape()).scaled(
                        Fraction(rng.randint(-4, 4), rng.randint(1, 3))
                    )
                rebuilt = immanant.zero_immanant(n)
                for rep, c in immanant.percent_basis_decompose(f):
                    members = next(cl for cl in classes if rep in cl)
                    rebuilt = rebuilt + immanant.class_indicator(n, members).scaled(c)
                rec.check(
                    "span element reconstructs from class decomposition",
                    f"n={n} trial={trial}", f, rebuilt,
                )

    return _report("A9", n, body)


def suite_a10(n: int) -> VerificationReport:
    """Complementary-minor expansions reproduce the immanants exactly, and
    the 0/1 witness matrix separates percent from Temperley-Lieb values."""

    def body(rec: _Recorder) -> None:
        imms = immanant.all_tl_immanants(n)
        for w in _applicable_two_case(n):
            total = immanant.zero_immanant(n)
            for s, I, J in classify.cm_expansion(w):
                total = total + immanant.cm_immanant(n, I, J).scaled(s)
            rec.check(
                "signed CM expansion equals the immanant",
                perm.format_perm(w), imms[w], total.scaled(perm.sign(w)),
            )
        for w in perm.avoiding_321(n):
            if not perm.avoids(w, PATTERN_1324, PATTERN_2143):
                continue
            if w[0] != 1 and w[0] != w[-1] + 1:
                continue
            total = immanant.zero_immanant(n)
            for I, J in classify.rect_cm_expansion(w):
                total = total + immanant.cm_immanant(n, I, J)
            rec.check(
                "rectangle CM expansion equals the hull percent immanant",
                perm.format_perm(w),
                immanant.percent_immanant(immanant.hull(w)), total,
            )
        for w in _applicable_two_case(n):
            X = immanant.witness_matrix(w)
            rec.check(
                "witness matrix: hull percent immanant is +-1",
                perm.format_perm(w),
                1,
                abs(immanant.evaluate(
                    immanant.percent_immanant(immanant.hull(w)), X
                )),
            )
            rec.check(
                "witness matrix: Temperley-Lieb immanant vanishes",
                perm.format_perm(w),
                Fraction(0), immanant.evaluate(imms[w], X),
            )

    return _report("A10", n, body)


SUITES: dict[str, Callable[[int], VerificationReport]] = {
    "A1": suite_a1,
    "A2": suite_a2,
    "A3": suite_a3,
    "A4": suite_a4,
    "A5": suite_a5,
    "A6": suite_a6,
    "A7": suite_a7,
    "A8": suite_a8,
    "A9": suite_a9,
    "A10": suite_a10,
}

DEFAULT_SIZES: dict[str, tuple[int, ...]] = {
    "A1": (3, 4, 5, 6),
    "A2": (3, 4, 5, 6),
    "A3": (3, 4, 5, 6, 7),
    "A4": (2, 3, 4, 5),
    "A5": (2, 3, 4, 5),
    "A6": (1, 2, 3, 4, 5, 6, 7, 8),
    "A7": (2, 3, 4, 5, 6),
    "A8": (4, 5, 6, 7),
    "A9": (2, 3, 4, 5, 6),
    "A10": (4, 5, 6),
}


def default_sizes(suite: str) -> tuple[int, ...]:
    return DEFAULT_SIZES[suite]


def run_suite(suite: str, n: int) -> VerificationReport:
    """Run one suite at one size."""
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {sorted(SUITES)}")
    return SUITES[suite](n)


def run_suites(
    names: Iterable[str], sizes: Iterable[int] | None = None
) -> list[VerificationReport]:
    reports = []
    for name in names:
        for n in (sizes if sizes is not None else default_sizes(name)):
            reports.append(run_suite(name, n))
    return reports
