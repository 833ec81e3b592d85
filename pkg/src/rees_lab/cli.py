"""Command-line frontend.

Exit codes: 0 completed (and matched --expect when given); 1 completed
with a verdict that contradicts --expect; 2 input error.  The text
output is a projection of the JSON report, which validates against the
shipped report.schema.json.  Reports are byte-identical for a fixed
input, seed and version; timings are emitted only under --timings.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from . import __version__
from .certify import (
    HypothesisError,
    claim_sweep,
    m_full_check,
    mu_max_oracle,
    rees_brute_oracle,
    rees_certificate,
    sperner_check,
    strong_rees_certificate,
    thm2_verify,
    thm31_verify,
    wlp_check,
)
from .linalg import DEFAULT_SEED, FieldSpec, LinearForm, mult_map_matrix, rank
from .monomials import (
    InputError,
    aci_ideal,
    cap_with_m_power,
    cone_extension,
    hilbert_function,
    is_artinian,
)
from .posets import (
    SizeError,
    dump,
    lym_brute,
    max_antichain,
    max_antichain_brute,
    nmp_check,
    parse_dump,
    poset_from_algebra,
)
from .specparse import SpecParseError, format_ideal, parse_ideal

REPRO_ITEMS = [
    "example:9,3",
    "rem-mu:9,3",
    "claim:9,3",
    "thm31:5,4",
    "fivevar",
    "cone:9,3",
    "mfull-sanity",
]


def _field(args) -> FieldSpec:
    return FieldSpec(args.char)


def _load_ideal(args):
    if getattr(args, "poset", None):
        return None
    try:
        return parse_ideal(args.spec)
    except SpecParseError as exc:
        raise exc


# ---------------------------------------------------------------------------
# per-command result builders


def _cmd_hilbert(args, ideal, field):
    H = hilbert_function(ideal)
    return {"hilbert": list(H), "top_degree": len(H), "dimension": sum(H),
            "mu": ideal.mu}


def _cmd_wlp(args, ideal, field):
    return wlp_check(ideal, field, seed=args.seed).to_dict()


def _cmd_sperner(args, ideal, field):
    return sperner_check(ideal).to_dict()


def _cmd_mfull(args, ideal, field):
    return m_full_check(ideal, field, seed=args.seed).to_dict()


def _cmd_rees(args, ideal, field):
    if args.cap is None:
        raise InputError("rees requires --cap P (the m-power cap exponent)")
    return rees_certificate(ideal, args.cap).to_dict()


def _cmd_strong_rees(args, ideal, field):
    if args.cap is None:
        raise InputError("strong-rees requires --cap P")
    return strong_rees_certificate(ideal, args.cap).to_dict()


def _poset_from_args(args, ideal):
    if getattr(args, "poset", None):
        with open(args.poset, encoding="utf-8") as fh:
            return parse_dump(fh.read())
    return poset_from_algebra(ideal)


def _cmd_lym(args, ideal, field):
    P = _poset_from_args(args, ideal)
    nmp = nmp_check(P)
    result = {
        "level_sizes": list(P.level_sizes()),
        "nmp": nmp,
        "lym": all(nmp),
    }
    if P.size <= 22:
        result["lym_brute"] = lym_brute(P)
    return result


def _cmd_poset(args, ideal, field):
    P = _poset_from_args(args, ideal)
    return {
        "level_sizes": list(P.level_sizes()),
        "size": P.size,
        "dump": dump(P),
    }


def _cmd_oracle(args, ideal, field):
    P = _poset_from_args(args, ideal)
    size, witness = max_antichain(P)
    result = {
        "level_sizes": list(P.level_sizes()),
        "dilworth_max_antichain": size,
        "witness": [lab for _, lab in witness.members],
    }
    if P.size <= 22:
        result["brute_max_antichain"] = max_antichain_brute(P)
        result["agree"] = result["brute_max_antichain"] == size
        if ideal is not None:
            mu_max, mu_witness = mu_max_oracle(ideal)
            brute = rees_brute_oracle(ideal)
            result["mu_max"] = mu_max
            result["mu_max_witness"] = format_ideal(mu_witness)
            result["rees_brute"] = brute.to_dict()
    return result


# ---------------------------------------------------------------------------
# the reproduction suite


def _run_repro_item(item: str, char: int, seed: int) -> dict:
    field = FieldSpec(char)
    t0 = time.perf_counter()
    detail: dict = {}
    if item.startswith("example:"):
        k, alpha = (int(v) for v in item.split(":")[1].split(","))
        rec = thm2_verify(k, k, k, alpha, alpha, alpha, field, seed=seed)
        status = rec.status
        detail = {"reasons": rec.reasons,
                  "wlp_failure_degrees":
                      rec.details["wlp"]["failure_degrees"],
                  "s": rec.details["s"]}
    elif item.startswith("rem-mu:"):
        k, alpha = (int(v) for v in item.split(":")[1].split(","))
        ideal = aci_ideal(k, k, k, alpha, alpha, alpha)
        s = (3 * k + 3 * alpha) // 3 - 2
        mu_lo = cap_with_m_power(ideal, s).mu
        mu_hi = cap_with_m_power(ideal, s + 1).mu
        status = "PASS" if mu_lo == mu_hi else "FAIL"
        detail = {"mu_cap_at_s": mu_lo, "mu_cap_at_s_plus_1": mu_hi, "s": s}
    elif item.startswith("claim:"):
        from .certify import claim_profile

        k, alpha = (int(v) for v in item.split(":")[1].split(","))
        ideal = aci_ideal(k, k, k, alpha, alpha, alpha)
        ok = claim_profile(ideal, seed=seed)
        status = "PASS" if ok else "FAIL"
    elif item.startswith("thm31:"):
        N, n = (int(v) for v in item.split(":")[1].split(","))
        rec = thm31_verify(N, n, field, seed=seed)
        status = rec.status
        detail = {"reasons": rec.reasons, "d": rec.details["d"]}
    elif item == "fivevar":
        ideal = parse_ideal("n=5; gens=x1^5,x2^5,x3^5,x4^5,x5^5,x1 x2 x3 x4 x5")
        y = LinearForm.sum_of_variables(5)
        ok = True
        ranks = {}
        for k in (9, 10):
            M = mult_map_matrix(ideal, y, k, field)
            r = rank(M)
            ranks[f"map_{k - 1}_to_{k}"] = {
                "rank": r, "rows": M.nrows, "cols": M.ncols,
                "injective": r == M.ncols, "surjective": r == M.nrows,
            }
            ok = ok and r < M.ncols and r < M.nrows
        status = "PASS" if ok else "FAIL"
        detail = {"ranks": ranks}
    elif item.startswith("cone:"):
        k, alpha = (int(v) for v in item.split(":")[1].split(","))
        base = aci_ideal(k, k, k, alpha, alpha, alpha)
        s = (3 * k + 3 * alpha) // 3 - 2
        capped = cap_with_m_power(base, s + 1)
        cone = cone_extension(capped)
        mf = m_full_check(cone, field, seed=seed)
        status = "PASS" if (is_artinian(cone)
                            and mf.verdict == "NOT_M_FULL") else "FAIL"
        detail = {"cone_mu": cone.mu, "cone_nvars": cone.nvars,
                  "m_full_verdict": mf.verdict}
    elif item == "mfull-sanity":
        from .monomials import m_power

        ok = True
        for n in range(2, 5):
            for p in range(1, 6):
                rep = m_full_check(m_power(p, n), field, seed=seed)
                ok = ok and rep.verdict == "M_FULL" and rep.witness == "x1"
        status = "PASS" if ok else "FAIL"
    elif item == "sweep":
        rep = claim_sweep(seed=seed)
        status = "PASS" if rep.all_claims_hold else "FAIL"
        detail = {"checked": rep.checked,
                  "wlp_failures": len(rep.wlp_failures)}
    else:
        raise InputError(f"unknown repro item {item!r}")
    return {"item": item, "status": status,
            "elapsed_ms": round((time.perf_counter() - t0) * 1000, 1),
            **({"detail": detail} if detail else {})}


def _cmd_repro(args) -> dict:
    items = list(REPRO_ITEMS)
    if args.full:
        items.append("sweep")
    if args.only:
        wanted = set(args.only)
        unknown = wanted - set(items) - {"sweep"}
        if unknown:
            raise InputError(f"unknown repro items: {sorted(unknown)}")
        items = [it for it in items + ["sweep"] if it in wanted]
    threads = int(os.environ.get("RESLAB_THREADS", "1"))
    if threads > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            futures = {it: pool.submit(_run_repro_item, it, args.char, args.seed)
                       for it in items}
            results = [futures[it].result() for it in items]
    else:
        results = [_run_repro_item(it, args.char, args.seed) for it in items]
    if not args.timings:
        for r in results:
            r.pop("elapsed_ms", None)
    ok = all(r["status"] == "PASS" for r in results)
    return {"items": results, "all_pass": ok}


# ---------------------------------------------------------------------------
# rendering


def _print_text(command: str, report: dict, out) -> None:
    result = report["result"]
    if command == "hilbert":
        print(",".join(str(v) for v in result["hilbert"]), file=out)
        return
    if command == "poset":
        out.write(result["dump"])
        return
    if command == "wlp":
        print(f"verdict: {result['verdict']}", file=out)
        if result["failure_degrees"]:
            print("failure degrees: "
                  + ",".join(str(k) for k in result["failure_degrees"]), file=out)
        sd = result.get("s_diagnostics")
        if sd:
            print(f"s: {sd['s']} (integral: {sd['s_integral']}, "
                  f"flat max: {sd['dims_equal_max']}, "
                  f"full matching at s+1: {sd['full_matching_at_s_plus_1']})",
                  file=out)
        print("k\tdim_src\tdim_tgt\trank\tinj\tsurj", file=out)
        for d in result["degrees"]:
            print(f"{d['k']}\t{d['dim_source']}\t{d['dim_target']}"
                  f"\t{d['generic_rank']}\t{d['injective']}\t{d['surjective']}",
                  file=out)
        return
    if command == "sperner":
        print(f"sperner: {result['sperner']} (route {result['route']})", file=out)
        print(f"max antichain: {result['max_antichain_size']}; "
              f"max Hilbert value: {result['max_hilbert']}", file=out)
        return
    if command == "mfull":
        print(f"verdict: {result['verdict']}", file=out)
        if result["witness"]:
            print(f"witness: {result['witness']}", file=out)
        cert = result.get("certificate")
        if cert:
            print(f"certificate: p={cert['p']}, s={cert['s']}, generic rank "
                  f"{cert['generic_rank_at_s']} < dim {cert['dim_at_s']}",
                  file=out)
        return
    if command in ("rees", "strong-rees"):
        verdict = result["verdict"] or "NOT_CERTIFIED"
        print(f"verdict: {verdict}", file=out)
        print(f"capped ideal: {result['capped']} (mu = {result['mu_capped']})",
              file=out)
        for note in result["notes"]:
            print(f"note: {note}", file=out)
        return
    if command == "lym":
        print(f"lym: {result['lym']}", file=out)
        print("level\tsize\tnmp_step", file=out)
        sizes = result["level_sizes"]
        for i, s in enumerate(sizes):
            step = result["nmp"][i] if i < len(result["nmp"]) else "-"
            print(f"{i}\t{s}\t{step}", file=out)
        return
    if command == "oracle":
        print(f"dilworth max antichain: {result['dilworth_max_antichain']}",
              file=out)
        if "brute_max_antichain" in result:
            print(f"brute max antichain: {result['brute_max_antichain']} "
                  f"(agree: {result['agree']})", file=out)
        if "mu_max" in result:
            print(f"mu_max oracle: {result['mu_max']}", file=out)
            rb = result["rees_brute"]
            print(f"rees brute: rees={rb['rees']} strong={rb['strong_rees']} "
                  f"mu={rb['mu']}", file=out)
        return
    if command == "repro":
        for item in result["items"]:
            print(f"{item['item']}\t{item['status']}", file=out)
        print(f"all pass: {result['all_pass']}", file=out)
        return


def _verdict_of(command: str, result: dict) -> str:
    if command == "wlp":
        return result["verdict"]
    if command == "sperner":
        return "SPERNER" if result["sperner"] else "NOT_SPERNER"
    if command == "mfull":
        return result["verdict"]
    if command in ("rees", "strong-rees"):
        return result["verdict"] or "NOT_CERTIFIED"
    if command == "lym":
        return "LYM" if result["lym"] else "NOT_LYM"
    if command == "oracle":
        return "AGREE" if result.get("agree", True) else "DISAGREE"
    if command == "repro":
        return "PASS" if result["all_pass"] else "FAIL"
    return "DONE"


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="rees-lab",
        description="Hilbert functions, Lefschetz ranks, poset matchings "
                    "and Rees/m-full certificates for monomial algebras.",
    )
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, needs_spec=True, poset_ok=False):
        if needs_spec:
            nargs = {} if not poset_ok else {"nargs": "?"}
            p.add_argument("spec", help="ideal spec text or macro", **nargs)
        p.add_argument("--char", type=int, default=0,
                       help="field characteristic (0 or a prime)")
        p.add_argument("--seed", type=int, default=DEFAULT_SEED)
        p.add_argument("--json", metavar="PATH",
                       help="write the JSON report to PATH ('-' for stdout)")
        p.add_argument("--figdir", metavar="DIR",
                       help="render matplotlib figures into DIR")
        p.add_argument("--expect", metavar="VERDICT",
                       help="exit 1 unless the primary verdict matches")
        p.add_argument("--timings", action="store_true",
                       help="include timings in the report")
        p.add_argument("-v", "--verbose", action="store_true")

    sp = sub.add_parser("hilbert", help="Hilbert function of the quotient")
    common(sp)
    sp = sub.add_parser("wlp", help="weak Lefschetz check (generic ranks)")
    common(sp)
    sp = sub.add_parser("sperner", help="Sperner certificate")
    common(sp)
    sp = sub.add_parser("mfull", help="m-fullness check")
    common(sp)
    sp = sub.add_parser("rees", help="Rees certificate for I + m^p")
    common(sp)
    sp.add_argument("--cap", type=int, required=True, metavar="P")
    sp = sub.add_parser("strong-rees", help="strong Rees certificate")
    common(sp)
    sp.add_argument("--cap", type=int, required=True, metavar="P")
    sp = sub.add_parser("lym", help="normalized matching / LYM check")
    common(sp, poset_ok=True)
    sp.add_argument("--poset", metavar="FILE", help="read a poset dump")
    sp = sub.add_parser("poset", help="emit the poset dump")
    common(sp, poset_ok=True)
    sp.add_argument("--poset", metavar="FILE", help="read a poset dump")
    sp = sub.add_parser("oracle", help="Dilworth vs brute-force oracles")
    common(sp, poset_ok=True)
    sp.add_argument("--poset", metavar="FILE", help="read a poset dump")
    sp = sub.add_parser("repro", help="run the paper-reproduction suite")
    common(sp, needs_spec=False)
    sp.add_argument("--only", nargs="+", metavar="ITEM",
                    help=f"run a subset of {REPRO_ITEMS + ['sweep']}")
    sp.add_argument("--full", action="store_true",
                    help="include the half-hour claim sweep")
    return ap


_BUILDERS = {
    "hilbert": _cmd_hilbert,
    "wlp": _cmd_wlp,
    "sperner": _cmd_sperner,
    "mfull": _cmd_mfull,
    "rees": _cmd_rees,
    "strong-rees": _cmd_strong_rees,
    "lym": _cmd_lym,
    "poset": _cmd_poset,
    "oracle": _cmd_oracle,
}


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    t0 = time.perf_counter()
    try:
        field = _field(args)
        if args.command == "repro":
            ideal = None
            result = _cmd_repro(args)
        else:
            if getattr(args, "poset", None):
                ideal = None
                if args.command not in ("lym", "poset", "oracle"):
                    raise InputError("--poset applies to lym/poset/oracle only")
            else:
                if getattr(args, "spec", None) is None:
                    raise InputError("an ideal spec is required")
                ideal = parse_ideal(args.spec)
                if args.command != "poset" and not is_artinian(ideal):
                    raise InputError("the ideal is not Artinian "
                                     "(some variable has no pure power)")
            result = _BUILDERS[args.command](args, ideal, field)
    except SpecParseError as exc:
        print(exc.annotated(), file=sys.stderr)
        return 2
    except (InputError, SizeError, HypothesisError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    report = {
        "tool": "rees-lab",
        "version": __version__,
        "schema_version": 1,
        "command": args.command,
        "seed": args.seed,
        "field": {"characteristic": args.char},
        "input": {
            "spec": getattr(args, "spec", None),
            "ideal": format_ideal(ideal) if ideal is not None else None,
            "nvars": ideal.nvars if ideal is not None else None,
            "mu": ideal.mu if ideal is not None else None,
            "cap": getattr(args, "cap", None),
            "poset_file": getattr(args, "poset", None),
        },
        "result": result,
    }
    exit_code = 0
    if args.expect:
        actual = _verdict_of(args.command, result)
        matched = actual == args.expect
        report["expect"] = {"expected": args.expect, "actual": actual,
                            "matched": matched}
        if not matched:
            exit_code = 1
    if args.figdir:
        from . import plots

        report["figures"] = plots.render_for_command(
            args.command, result, args.figdir
        )
        if args.command == "repro":
            tsv = os.path.join(args.figdir, "repro_summary.tsv")
            with open(tsv, "w", encoding="utf-8") as fh:
                for item in result["items"]:
                    fh.write(f"{item['item']}\t{item['status']}\t"
                             f"{item.get('elapsed_ms', '')}\n")
            report["figures"].append(tsv)
    if args.timings:
        report["timings_ms"] = {
            "total": round((time.perf_counter() - t0) * 1000, 1)
        }

    if args.json:
        payload = json.dumps(report, indent=2, sort_keys=False) + "\n"
        if args.json == "-":
            sys.stdout.write(payload)
        else:
            with open(args.json, "w", encoding="utf-8") as fh:
                fh.write(payload)
    if args.json != "-":
        _print_text(args.command, report, sys.stdout)
        if args.expect and exit_code:
            print(f"expected {args.expect}, got {report['expect']['actual']}",
                  file=sys.stderr)
    return exit_code


if __name__ == "__main__":
    sys.exit(main())
