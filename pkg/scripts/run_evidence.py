"""Dedekind scans for the three degree-24 pairs and the parametric family at u = v = 1.

For each target the script reports usable primes, compatibility failures
against the cube group R and against the larger group without the corner
sum-zero condition, and the residual subset-sum degree sets.
"""

import argparse
import dataclasses
import json
import time
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from rubikgalois import fixtures
from rubikgalois.construct import build_family_factors, build_theorem1
from rubikgalois.evidence import dedekind_scan, joint_compatible, subset_sum_irreducibility


@dataclass
class EvidenceConfig:
    pmax: int = 5000
    family_pmax: int = 2000
    jobs: int = 4
    out: str = "runs/evidence.json"


def summarize(f, g, pmax, jobs):
    t0 = time.perf_counter()
    scan = dedekind_scan(f, pmax, g, jobs=jobs)
    used = [r for r in scan if r.usable]
    fail_r = [r.prime for r in used if not joint_compatible(r.pattern_f, r.pattern_g).joint_ok]
    fail_hat = [r.prime for r in used
                if not joint_compatible(r.pattern_f, r.pattern_g, corner_sum_zero=False).joint_ok]
    return {
        "pmax": pmax,
        "usable": len(used),
        "skipped": {r.prime: r.skipped for r in scan if not r.usable},
        "failures_R": fail_r,
        "failures_without_corner_sum": fail_hat,
        "subset_sums_f": sorted(subset_sum_irreducibility([r.pattern_f for r in used], f.degree)),
        "subset_sums_g": sorted(subset_sum_irreducibility([r.pattern_g for r in used], g.degree)),
        "seconds": round(time.perf_counter() - t0, 1),
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    cfg = EvidenceConfig()
    for f in dataclasses.fields(cfg):
        ap.add_argument(f"--{f.name.replace('_', '-')}", type=type(getattr(cfg, f.name)), default=getattr(cfg, f.name))
    cfg = EvidenceConfig(**vars(ap.parse_args()))

    results = {}
    for name in fixtures.VARIANTS:
        fx = fixtures.variant(name)
        data = build_theorem1(Fraction(fx["t"]), Fraction(fx["s"]), int(fx["v"]), int(fx["w"]))
        results[name] = summarize(data.f24, data.g24, cfg.pmax, cfg.jobs)
    f, g = build_family_factors(1, 1)
    results["family_u1_v1"] = summarize(f, g, cfg.family_pmax, cfg.jobs)

    for name, r in results.items():
        print(f"{name:14s} usable {r['usable']:4d}  R-failures {len(r['failures_R']):3d}  "
              f"no-sum-zero failures {len(r['failures_without_corner_sum']):3d}  "
              f"sums f {r['subset_sums_f']} g {r['subset_sums_g']}  ({r['seconds']} s)")
    Path(cfg.out).parent.mkdir(parents=True, exist_ok=True)
    Path(cfg.out).write_text(json.dumps({"config": dataclasses.asdict(cfg), "results": results}, indent=1))


if __name__ == "__main__":
    main()
