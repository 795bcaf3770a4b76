"""Frobenius evidence: Dedekind scans, compatibility with the cube group, Chebotarev statistics.

A degree pattern of a degree-24 polynomial whose Galois group sits inside
C3 wr S8 (resp. C2 wr S12) is the facet cycle type of some element. Each
base cycle of length d either lifts to one 3d-cycle (twisted) or three
d-cycles (untwisted); likewise for edges with 2d / (d, d). The checks here
are necessary conditions only: passing says the pattern is consistent with
the group, never that the Galois group equals it.
"""

from __future__ import annotations

import itertools
import random
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .cube import facet_pattern, random_realistic
from .fpfactor import DegreePattern, GoodPrimeReport, ReducedModel, _pattern_of, primes_up_to
from .polyring import Poly, squarefree_check


@dataclass(frozen=True)
class SideWitness:
    """Base partition with lift marks: ``((d, marked), ...)``."""

    cycles: tuple[tuple[int, bool], ...]
    lift: int  # 3 for corners, 2 for edges

    def expand(self) -> DegreePattern:
        parts = []
        for d, marked in self.cycles:
            parts.extend([self.lift * d] if marked else [d] * self.lift)
        return DegreePattern.of(parts)

    @property
    def base_partition(self) -> tuple[int, ...]:
        return tuple(sorted((d for d, _ in self.cycles), reverse=True))

    @property
    def marked(self) -> int:
        return sum(1 for _, m in self.cycles if m)

    @property
    def parity(self) -> int:
        """Parity of the base permutation: (#points - #cycles) mod 2."""
        return (sum(d for d, _ in self.cycles) - len(self.cycles)) % 2


@dataclass(frozen=True)
class CompatibilityVerdict:
    corner_ok: bool
    edge_ok: bool
    joint_ok: bool
    witness: tuple[SideWitness, SideWitness] | None = None


def _as_pattern(lam) -> DegreePattern:
    if isinstance(lam, DegreePattern):
        return lam
    if hasattr(lam, "parts"):
        return DegreePattern.of(lam.parts)
    return DegreePattern.of(lam)


def _side_states(lam, lift: int, base_n: int) -> dict:
    """All achievable (marked-count class, base parity) states, one witness each.

    A part k of lam is either one of ``lift`` copies of an unmarked base
    cycle of length k, or the image of a marked base cycle of length
    k / lift. Different part sizes are independent.
    """
    lam = _as_pattern(lam)
    if lam.degree != lift * base_n:
        raise ValueError(f"pattern must have degree {lift * base_n}")
    per_size = []
    for k, c in sorted(Counter(lam.parts).items()):
        options = []
        for t in range(c % lift, c + 1, lift):
            if t and k % lift:
                continue
            u = (c - t) // lift
            options.append([(k // lift, True)] * t + [(k, False)] * u)
        if not options:
            return {}
        per_size.append(options)
    states = {}
    for combo in itertools.product(*per_size):
        w = SideWitness(tuple(sorted(itertools.chain.from_iterable(combo), reverse=True)), lift)
        key = (min(w.marked, 2), w.marked % 2, w.parity)
        states.setdefault(key, w)
    return states


def _corner_states(lam, sum_zero=True):
    states = _side_states(lam, 3, 8)
    # sum of twists can vanish unless exactly one base cycle is twisted
    return {k: w for k, w in states.items() if not sum_zero or k[0] != 1}


def _edge_states(lam):
    return {k: w for k, w in _side_states(lam, 2, 12).items() if k[1] == 0}


def corner_compatible(lam, sum_zero: bool = True) -> tuple[bool, SideWitness | None]:
    """Can lam be the corner-facet cycle type of an element of (C3 wr S8)°?

    With ``sum_zero=False`` the ambient group is the full C3 wr S8.
    """
    states = _corner_states(lam, sum_zero)
    w = next(iter(states.values()), None)
    return w is not None, w


def edge_compatible(lam) -> tuple[bool, SideWitness | None]:
    states = _edge_states(lam)
    w = next(iter(states.values()), None)
    return w is not None, w


def joint_compatible(lf, lg, corner_sum_zero: bool = True) -> CompatibilityVerdict:
    """Corner and edge witnesses whose base permutations have equal sign."""
    cs = _corner_states(lf, corner_sum_zero)
    es = _edge_states(lg)
    for ck, cw in cs.items():
        for ek, ew in es.items():
            if ck[2] == ek[2]:
                return CompatibilityVerdict(True, True, True, (cw, ew))
    return CompatibilityVerdict(bool(cs), bool(es), False, None)


# -- scanning -------------------------------------------------------------------------

@dataclass(frozen=True)
class ScanResult:
    prime: int
    pattern_f: DegreePattern | None
    pattern_g: DegreePattern | None = None
    skipped: str | None = None

    @property
    def usable(self) -> bool:
        return self.skipped is None

    def line(self) -> str:
        if self.skipped:
            return f"{self.prime}: skipped ({self.skipped})"
        if self.pattern_g is None:
            return f"{self.prime}: {self.pattern_f}"
        return f"{self.prime}: {self.pattern_f} | {self.pattern_g}"


def _scan_chunk(args):
    polys, primes = args
    models = [ReducedModel(f) for f in polys]
    out = []
    for p in primes:
        pats, reason = [], None
        for m in models:
            report, a = m.check(p)
            if not report.usable:
                reason = report.reason
                break
            pats.append(_pattern_of(a, p))
        if reason:
            out.append(ScanResult(p, None, None, reason))
        else:
            out.append(ScanResult(p, pats[0], pats[1] if len(pats) > 1 else None))
    return out


def dedekind_scan(f: Poly, p_max: int, g: Poly | None = None, jobs: int = 1) -> list[ScanResult]:
    """Degree patterns of f (and g) modulo every prime up to p_max.

    A prime is skipped when it is unusable for either polynomial.
    """
    polys = [f] if g is None else [f, g]
    for h in polys:
        if not squarefree_check(h):
            raise ValueError("dedekind_scan needs squarefree input")
    primes = primes_up_to(p_max)
    if jobs <= 1 or len(primes) < 2 * jobs:
        return _scan_chunk((polys, primes))
    chunks = [primes[i::jobs] for i in range(jobs)]
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        results = list(ex.map(_scan_chunk, [(polys, c) for c in chunks]))
    return sorted(itertools.chain.from_iterable(results), key=lambda r: r.prime)


def subset_sums(pattern) -> set[int]:
    sums = {0}
    for d in _as_pattern(pattern).parts:
        sums |= {s + d for s in sums}
    return sums


def subset_sum_irreducibility(patterns, n: int) -> set[int]:
    """Degrees of possible rational factors left after intersecting all patterns.

    ``{0, n}`` certifies irreducibility over Q.
    """
    result = set(range(n + 1))
    for pat in patterns:
        result &= subset_sums(pat)
    return result


# -- Chebotarev comparison ------------------------------------------------------------

def pair_key(corner, edge) -> str:
    return f"{_as_pattern(corner)} | {_as_pattern(edge)}"


def total_variation(h1: dict, h2: dict) -> float:
    n1, n2 = sum(h1.values()), sum(h2.values())
    if not n1 or not n2:
        raise ValueError("empty histogram")
    return 0.5 * sum(abs(h1.get(k, 0) / n1 - h2.get(k, 0) / n2) for k in set(h1) | set(h2))


def group_histogram(samples: int, seed) -> Counter:
    rng = random.Random(seed)
    hist = Counter()
    for _ in range(samples):
        fp = facet_pattern(random_realistic(rng))
        hist[pair_key(fp.corner, fp.edge)] += 1
    return hist


def corner_marginal(hist: dict) -> Counter:
    out = Counter()
    for k, v in hist.items():
        out[k.split(" | ")[0]] += v
    return out


def chebotarev_compare(f24: Poly, g24: Poly, p_max: int, samples: int, seed=0, jobs: int = 1,
                       null_draws: int = 5) -> dict:
    """Frobenius pattern-pair histogram against uniform sampling of the cube group.

    Besides the TV distance, the report carries ``tv_null``: TV distances
    between the group histogram and fresh group samples of the same size as
    the prime set, i.e. what a perfect match would score at this sample size.
    """
    scan = dedekind_scan(f24, p_max, g24, jobs=jobs)
    used = [r for r in scan if r.usable]
    frob = Counter(pair_key(r.pattern_f, r.pattern_g) for r in used)
    group = group_histogram(samples, seed)
    failures = [r.prime for r in used if not joint_compatible(r.pattern_f, r.pattern_g).joint_ok]
    tv_null = [total_variation(group_histogram(len(used), f"{seed}/null/{i}"), group)
               for i in range(null_draws)]
    return {
        "primes_used": [r.prime for r in used],
        "skipped": {str(r.prime): r.skipped for r in scan if not r.usable},
        "histogram_frobenius": dict(sorted(frob.items())),
        "histogram_group": dict(sorted(group.items())),
        "tv_distance": total_variation(frob, group),
        "tv_corner_marginal": total_variation(corner_marginal(frob), corner_marginal(group)),
        "tv_null": tv_null,
        "compatibility_failures": failures,
    }
