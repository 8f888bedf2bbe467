"""Command line front end: load a tiling, run the pipeline, print a report.

    projcoh compute danzer --verify --json out.json
    projcoh compute my_tiling.yaml --prime 3 --threads 4
    projcoh list-presets
    projcoh show-preset canonical-d6
"""

from __future__ import annotations

import argparse
import hashlib
import json
import logging
import sys
from dataclasses import dataclass
from pathlib import Path

from . import __version__
from .arrangement import ArrangementError, NonGenericArrangement, build_arrangement
from .assemble import InconsistentRanks, check_invariants, cohomology, verify_mod_p
from .config import ConfigError, TilingConfig, list_presets, load_config, load_preset, preset_text
from .exactlin import AbelianGroup, is_prime
from .mvss import IncidenceBroken, NegativeF
from .oracles import sample_pair_checks
from .skgroups import S3Status
from .wedgelat import GroupClosureError, group_closure

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_NONGENERIC = 3
EXIT_INDETERMINATE = 4
EXIT_INCONSISTENT = 5

log = logging.getLogger("projcoh")


@dataclass(frozen=True)
class RunOptions:
    verify: bool = False
    primes: tuple[int, ...] = ()
    threads: int = 1


class PipelineError(RuntimeError):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _group(g: AbelianGroup) -> dict:
    return {"free_rank": g.free_rank, "factors": list(g.torsion)}


def _primes_dividing(numbers) -> list[int]:
    out = set()
    for n in numbers:
        d, m = 2, n
        while d * d <= m:
            while m % d == 0:
                out.add(d)
                m //= d
            d += 1
        if m > 1:
            out.add(m)
    return sorted(out)


def run(config: TilingConfig, options: RunOptions = RunOptions()) -> dict:
    """Full pipeline for one tiling; returns the structured report.

    Errors surface as PipelineError carrying the exit code.
    """
    for p in options.primes:
        if not is_prime(p):
            raise PipelineError(EXIT_CONFIG, f"--prime {p} is not prime")
    try:
        group = group_closure(config.generator_matrices(), bound=config.group_order_bound)
    except GroupClosureError as exc:
        raise PipelineError(EXIT_CONFIG, f"symmetry generators: {exc}") from exc
    log.info("group of order %d", group.order)

    try:
        arr = build_arrangement(list(group), config.seed_subtori(), threads=options.threads)
    except NonGenericArrangement as exc:
        raise PipelineError(EXIT_NONGENERIC, str(exc)) from exc
    except ArrangementError as exc:
        raise PipelineError(EXIT_CONFIG, str(exc)) from exc

    try:
        result = cohomology(arr, primes=tuple(sorted(set(options.primes))))
    except (NegativeF, IncidenceBroken, InconsistentRanks) as exc:
        raise PipelineError(EXIT_INCONSISTENT, str(exc)) from exc

    ha = result.homology_A
    sk = result.sk
    v = sk.s3_verdict
    report = {
        "name": config.name,
        "lattice_type": config.lattice_type,
        "planes": config.planes,
        "group_order": group.order,
        "counts": result.counts,
        "f": ha.f,
        "homology_A": [_group(g) for g in ha.h],
        "coker_d1": _group(ha.coker_d1),
        "S": [_group(sk.s0), _group(sk.s1), _group(sk.s2),
              _group(v.s3) if v.s3 is not None else {"free_rank": v.free_rank, "factors": None},
              {"free_rank": 0, "factors": []}],
        "H": [_group(g) for g in result.h],
        "chi": result.chi,
        "chi_betti": result.chi_betti,
        "s3_status": v.status.value,
        "s3_bounds": {"rank_M1": v.m1.rank, "rank_M2": v.m2.rank,
                      "index_M1_in_M2": v.m1.index_in_saturation(),
                      "index_M1_plus_M1prime_in_M2": v.lower.index_in_saturation()},
        "h3_torsion_bracket": result.h3_torsion_bracket,
        "torsion_sources": result.torsion_sources,
        "rank_tables": result.rank_table,
        "warnings": list(result.warnings),
        "invariant_violations": check_invariants(arr, result),
        "verification": [],
        "provenance": {"config_hash": config.digest(), "tool_version": __version__},
    }

    if options.verify:
        factors = [x for g in list(result.h) + list(ha.h) + [sk.s2] for x in g.torsion]
        primes = sorted(set(_primes_dividing(factors)) | {2} | set(options.primes))
        checks = []
        for p in primes:
            checks.extend(verify_mod_p(arr, result, p).checks)
        oracle = sample_pair_checks(
            list(arr.four_tori) + list(arr.two_tori),
            config.verify.oracle_samples,
            seed=0,
            max_q=config.verify.oracle_max_denominator,
        )
        for o in oracle:
            checks.append({"oracle": "covering-grid intersection", **o})
        report["verification"] = checks
    return report


def exit_code(report: dict) -> int:
    if report["invariant_violations"]:
        return EXIT_INCONSISTENT
    if any(c["passed"] is False for c in report["verification"]):
        return EXIT_INCONSISTENT
    if report["s3_status"] == S3Status.INDETERMINATE.value:
        return EXIT_INDETERMINATE
    return EXIT_OK


def report_json(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2) + "\n"


def report_digest(report: dict) -> str:
    return hashlib.sha256(report_json(report).encode()).hexdigest()


def _fmt(g: dict) -> str:
    parts = [f"Z^{g['free_rank']}"] if g["free_rank"] else []
    if g["factors"] is None:
        parts.append("(torsion undetermined)")
    else:
        for d in sorted(set(g["factors"])):
            k = g["factors"].count(d)
            parts.append(f"Z_{d}" + (f"^{k}" if k > 1 else ""))
    return " + ".join(parts) or "0"


def format_report(report: dict) -> str:
    c = report["counts"]
    lines = [
        f"{report['name']}  (lattice {report['lattice_type']}, planes {report['planes']}, "
        f"group order {report['group_order']})",
        "",
        "arrangement",
    ]
    lines += [f"  {k:<26} {v}" for k, v in c.items()]
    lines += ["", f"homology of A  (f = {report['f']}, coker d1 = {_fmt(report['coker_d1'])})"]
    lines += [f"  H_{k}(A) = {_fmt(g)}" for k, g in enumerate(report["homology_A"])]
    lines += ["", f"S_k  (S_3: {report['s3_status']})"]
    lines += [f"  S_{k} = {_fmt(g)}" for k, g in enumerate(report["S"])]
    b = report["s3_bounds"]
    lines.append(f"  rank M1 = {b['rank_M1']}, rank M2 = {b['rank_M2']}, "
                 f"[M2 : M1] = {b['index_M1_in_M2']}, "
                 f"[M2 : M1 + M1'] = {b['index_M1_plus_M1prime_in_M2']}")
    lines += ["", "cohomology of the hull"]
    lines += [f"  H^{k} = {_fmt(g)}" for k, g in enumerate(report["H"])]
    lines.append(f"  chi = {report['chi']}  (alternating Betti sum {report['chi_betti']})")
    for key, src in report["torsion_sources"].items():
        lines.append(f"  torsion of {key} from {src['source']}: {src['factors']}")
    if report["h3_torsion_bracket"]:
        br = report["h3_torsion_bracket"]
        lines.append(f"  H^3 torsion bracket: {br['from_H2A']} plus possibly {br['possible_S3_torsion']}")
    if report["rank_tables"]:
        lines += ["", "ranks of H^0..H^3 by coefficient field"]
        for field_, ranks in report["rank_tables"].items():
            name = "Q" if field_ == "Q" else f"F_{field_}"
            lines.append(f"  {name:<5} {ranks}")
    if report["verification"]:
        checks = report["verification"]
        ok = sum(1 for x in checks if x["passed"])
        skipped = sum(1 for x in checks if x["passed"] is None)
        lines += ["", f"verification: {ok}/{len(checks) - skipped} checks passed"
                  + (f", {skipped} skipped (S_3 undecided)" if skipped else "")]
        for x in checks:
            if x["passed"] is False:
                lines.append(f"  FAILED {x}")
    for w in report["warnings"]:
        lines.append(f"warning: {w}")
    for w in report["invariant_violations"]:
        lines.append(f"invariant violated: {w}")
    h = report["provenance"]
    lines += ["", f"config sha256 {h['config_hash'][:16]}  projcoh {h['tool_version']}"]
    return "\n".join(lines) + "\n"


def _load(target: str) -> TilingConfig:
    path = Path(target)
    if path.suffix in (".yaml", ".yml") or path.exists():
        return load_config(path)
    return load_preset(target)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="projcoh", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=f"projcoh {__version__}")
    ap.add_argument("-v", "--verbose", action="store_true", help="log pipeline progress")
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="compute the cohomology of a config file or preset")
    c.add_argument("target", help="path to a YAML config, or a preset name")
    c.add_argument("--json", metavar="PATH", help="write the structured report here ('-' for stdout)")
    c.add_argument("--verify", action="store_true",
                   help="check universal-coefficient identities and sample the intersection oracle")
    c.add_argument("--prime", metavar="P", type=int, action="append", default=[],
                   help="add an F_p rank table (repeatable)")
    c.add_argument("--threads", metavar="N", type=int, default=1)

    sub.add_parser("list-presets", help="list the bundled tilings")
    s = sub.add_parser("show-preset", help="print a bundled config")
    s.add_argument("name")
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s")
    try:
        if args.command == "list-presets":
            for p in list_presets():
                print(f"{p['name']:<20} {p['lattice_type']}  {p['planes']:<10} {p['description']}")
            return EXIT_OK
        if args.command == "show-preset":
            sys.stdout.write(preset_text(args.name))
            return EXIT_OK

        cfg = _load(args.target)
        if args.threads < 1:
            raise ConfigError("--threads must be positive")
        report = run(cfg, RunOptions(args.verify, tuple(args.prime), args.threads))
    except ConfigError as exc:
        print(f"projcoh: config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except PipelineError as exc:
        print(f"projcoh: {exc}", file=sys.stderr)
        return exc.code

    if args.json == "-":
        sys.stdout.write(report_json(report))
    else:
        sys.stdout.write(format_report(report))
        if args.json:
            Path(args.json).write_text(report_json(report))
    code = exit_code(report)
    if code == EXIT_INDETERMINATE:
        print("projcoh: S_3 freeness could not be decided", file=sys.stderr)
    elif code == EXIT_INCONSISTENT:
        print("projcoh: internal consistency check failed", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
