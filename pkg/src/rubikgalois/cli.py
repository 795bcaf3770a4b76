"""Command-line entry point: ``rubikgalois <command> [options]``.

Exit codes: 0 pass, 1 mathematical mismatch, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import logging
import math
import sys
from fractions import Fraction

from . import fixtures
from .bigexact import format_rational, is_perfect_square, parse_rational, probable_prime, verify_norm_form
from .construct import (
    appendix_t_of_xn,
    build_family_factors,
    build_theorem1,
    count_order2_semidirect,
    ec_multiples,
    family_dodecic,
    family_octic,
    family_ts,
    g12_from_r,
    semidirect_order,
    solve_params,
)
from .cube import RUBIK_ORDER, facet_group, two_generators, wreath_group_order
from .evidence import chebotarev_compare, dedekind_scan, joint_compatible, subset_sum_irreducibility
from .permgroup import bsgs_build, parse_cycles
from .polyring import discriminant, from_json_obj, squarefree_check, to_json_obj

log = logging.getLogger("rubikgalois")


class Check:
    def __init__(self):
        self.rows: list[tuple[str, bool, str]] = []

    def __call__(self, name: str, ok: bool, detail: str = ""):
        self.rows.append((name, bool(ok), detail))
        return ok

    @property
    def ok(self) -> bool:
        return all(ok for _, ok, _ in self.rows)

    def render(self) -> str:
        return "\n".join(f"[{'PASS' if ok else 'FAIL'}] {name}" + (f": {d}" if d else "") for name, ok, d in self.rows)


# -- commands ---------------------------------------------------------------------------

def cmd_cube_order(generators=None, model="all", degree=None) -> dict:
    if generators:
        n = degree or max(int(x) for g in generators for x in g.replace("(", ",").replace(")", ",").split(",") if x.strip())
        order = bsgs_build([parse_cycles(g, n) for g in generators]).order
        return {"generators": order}
    out = {"wreath": wreath_group_order()}
    if model in ("all", "facet"):
        out["T1..T6"] = facet_group().order
        a, b = two_generators()
        out["alpha,beta"] = bsgs_build([a, b]).order
    if model == "wreath":
        out["formula"] = "3^8 * 8! * 2^12 * 12! / 12"
    return out


def first_difference(got, expected):
    for k in range(max(len(got), len(expected))):
        if got[k] != expected[k]:
            return k, got[k], expected[k]
    return None


def cmd_verify_main(variant="main", p_max=5000, jobs=1) -> Check:
    fx = fixtures.variant(variant)
    check = Check()
    t, s = parse_rational(fx["t"]), parse_rational(fx["s"])
    v, w = int(fx["v"]), int(fx["w"])

    a, b, c = (parse_rational(x) for x in fx["abc"])
    params = solve_params(a, b, c, fx["convention"])
    check("solve_params", (params.t, params.s) == (t, s),
          f"({format_rational(params.t)}, {format_rational(params.s)}) via {fx['convention']} convention")

    data = build_theorem1(t, s, v, w)
    diff = first_difference(data.f24, fixtures.f24(variant))
    check("f24 coefficients", diff is None,
          "exact" if diff is None else f"X^{diff[0]}: got {diff[1]}, printed {diff[2]}")
    check("r = 12^6 w / (11^5 v)", data.r == parse_rational(fx["r"]), format_rational(data.r))
    if "g24_coefficient" in fx:
        check("g24 coefficient r^2", data.g24[0] == parse_rational(fx["g24_coefficient"]) == data.g24[2])

    d = data.disc_f8
    check("disc(f8)", d == int(fx["disc_f8"]), format_rational(d))
    check("disc(f8) factorization", math.prod(int(p) ** e for p, e in fx["disc_f8_factored"]) == d)
    big = max(abs(int(p)) for p, _ in fx["disc_f8_factored"])
    check("largest disc factor is a probable prime", probable_prime(big), str(big))
    check("norm form v^2 - 11 w^2", verify_norm_form(d, v, w))
    check("disc(f8) * disc(g12) square", is_perfect_square(d * discriminant(g12_from_r(data.r)))[0])
    check("Mobius support in 3Z", data.mobius_support == list(range(0, 25, 3)))
    check("normalized constant term is a cube in Q(w)", data.cube_root is not None, str(data.cube_root))
    check("wreath order = BSGS order of the face turns", wreath_group_order() == facet_group().order == RUBIK_ORDER)

    scan = [r for r in dedekind_scan(data.f24, p_max, data.g24, jobs=jobs) if r.usable]
    bad = [r.prime for r in scan if not joint_compatible(r.pattern_f, r.pattern_g).joint_ok]
    check(f"joint compatibility, {len(scan)} usable primes <= {p_max}", not bad, f"failures {bad[:10]}" if bad else "")
    for side, pats in (("f24", [r.pattern_f for r in scan]), ("g24", [r.pattern_g for r in scan])):
        residual = sorted(subset_sum_irreducibility(pats, 24))
        check(f"{side} irreducible by subset sums", residual == [0, 24], f"residual {residual}")
    return check


def cmd_family(u, v) -> dict:
    t, s = family_ts(u, v)
    f, g = build_family_factors(u, v)
    sq_const, _ = is_perfect_square(g[0])
    disc_prod = discriminant(family_octic(t)) * discriminant(family_dodecic(s))
    return {
        "u": format_rational(u), "v": format_rational(v),
        "t": format_rational(t), "s": format_rational(s),
        "f_part": to_json_obj(f), "g_part": to_json_obj(g),
        "p": to_json_obj(f * g),
        "g_constant_is_square": sq_const,
        "disc_product_is_square": is_perfect_square(disc_prod)[0],
        "squarefree": [squarefree_check(f), squarefree_check(g)],
    }


def cmd_scan(f, p_max, g=None, jobs=1):
    return dedekind_scan(f, p_max, g, jobs=jobs)


def cmd_chebotarev(variant="main", p_max=20000, samples=100000, seed=0, jobs=1) -> dict:
    fx = fixtures.variant(variant)
    data = build_theorem1(parse_rational(fx["t"]), parse_rational(fx["s"]), int(fx["v"]), int(fx["w"]))
    return chebotarev_compare(data.f24, data.g24, p_max, samples, seed=seed, jobs=jobs)


def cmd_appendix_ec(n=5) -> list[dict]:
    rows = []
    for k, P in enumerate(ec_multiples(n), start=1):
        rows.append({"n": k, "x": format_rational(P.x), "y": format_rational(P.y),
                     "t": format_rational(appendix_t_of_xn(P.x))})
    return rows


def cmd_distinguish24() -> dict:
    return {
        "order": semidirect_order(),
        "natural": count_order2_semidirect("natural"),
        "sign_twisted": count_order2_semidirect("sign_twisted"),
    }


def write_fixtures(path):
    """Recompute the derivable fixture values and write them to ``path`` for diffing."""
    out = {"variants": {}}
    for name in fixtures.VARIANTS:
        fx = fixtures.variant(name)
        data = build_theorem1(parse_rational(fx["t"]), parse_rational(fx["s"]), int(fx["v"]), int(fx["w"]))
        out["variants"][name] = {
            "t": format_rational(data.t), "s": format_rational(data.s),
            "disc_f8": format_rational(data.disc_f8), "r": format_rational(data.r),
            "g24_coefficient": format_rational(data.r ** 2),
            "f24_desc": [format_rational(c) for c in reversed(data.f24.coeffs)],
        }
    out["appendix"] = {"ec_x": [r["x"] for r in cmd_appendix_ec(5)]}
    with open(path, "w") as fh:
        json.dump(out, fh, indent=2)


# -- argument parsing --------------------------------------------------------------------

def _load_poly(path):
    with open(path) as fh:
        return from_json_obj(json.load(fh))


def _emit(obj, out):
    text = obj if isinstance(obj, str) else json.dumps(obj, indent=2, default=str)
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="rubikgalois", description=__doc__.splitlines()[0])
    ap.add_argument("--write-fixtures", metavar="PATH", help="write recomputed fixture values to PATH and exit")
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command")

    p = sub.add_parser("cube-order", help="group order by three routes")
    p.add_argument("--generators", nargs="+", help="cycle-notation generators instead of the face turns")
    p.add_argument("--degree", type=int, help="point count for --generators")
    p.add_argument("--model", choices=["all", "facet", "wreath"], default="all")

    p = sub.add_parser("verify-main", help="rebuild and check a main-theorem style pair")
    p.add_argument("--variant", choices=fixtures.VARIANTS, default="main")
    p.add_argument("--pmax", type=int, default=5000)
    p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("family", help="specialize the parametric family")
    p.add_argument("--u", default="1")
    p.add_argument("--v", default="1")
    p.add_argument("--out")

    p = sub.add_parser("scan", help="Dedekind degree-pattern scan of a polynomial JSON file")
    p.add_argument("poly")
    p.add_argument("--g", help="second polynomial file: scan the pair")
    p.add_argument("--pmax", type=int, default=1000)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out")

    p = sub.add_parser("chebotarev", help="Frobenius statistics vs uniform cube-group sampling")
    p.add_argument("--variant", choices=fixtures.VARIANTS, default="main")
    p.add_argument("--pmax", type=int, default=20000)
    p.add_argument("--samples", type=int, default=100000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out")

    p = sub.add_parser("appendix-ec", help="multiples of (-5, 8) on y^2 = x^3 + 189")
    p.add_argument("--n", type=int, default=5)

    sub.add_parser("distinguish24", help="order-2 counts of the natural and sign-twisted semidirect products")
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")

    if args.write_fixtures:
        write_fixtures(args.write_fixtures)
        return 0
    if not args.command:
        ap.print_usage(sys.stderr)
        return 2

    try:
        if args.command == "cube-order":
            orders = cmd_cube_order(args.generators, args.model, args.degree)
            for k, v in orders.items():
                print(f"{k}: {v}")
            if args.generators or args.model == "wreath":
                return 0
            return 0 if all(v == RUBIK_ORDER for k, v in orders.items()) else 1

        if args.command == "verify-main":
            check = cmd_verify_main(args.variant, args.pmax, args.jobs)
            print(check.render())
            return 0 if check.ok else 1

        if args.command == "family":
            report = cmd_family(parse_rational(args.u), parse_rational(args.v))
            _emit(report, args.out)
            return 0

        if args.command == "scan":
            f = _load_poly(args.poly)
            g = _load_poly(args.g) if args.g else None
            results = cmd_scan(f, args.pmax, g, args.jobs)
            _emit("\n".join(r.line() for r in results), args.out)
            return 0

        if args.command == "chebotarev":
            report = cmd_chebotarev(args.variant, args.pmax, args.samples, args.seed, args.jobs)
            _emit(report, args.out)
            return 0 if report["tv_distance"] <= 0.2 and not report["compatibility_failures"] else 1

        if args.command == "appendix-ec":
            for row in cmd_appendix_ec(args.n):
                print(f"{row['n']}: x = {row['x']}  t = {row['t']}")
            return 0

        if args.command == "distinguish24":
            counts = cmd_distinguish24()
            for k, v in counts.items():
                print(f"{k}: {v}")
            return 0 if counts["natural"] != counts["sign_twisted"] else 1
    except (ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 2


if __name__ == "__main__":
    sys.exit(main())
