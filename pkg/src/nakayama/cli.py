"""Command-line interface.

    nakayama analyze 5,6,6 [--json]
    nakayama retract 2,2,3 [--steps K] [--json]
    nakayama module 5,6,6 2:3 [--json]
    nakayama survey --n 3 --max-loewy 12 [--exact] [--json]

Exit codes: 0 success, 2 bad input, 3 internal invariant violation.
"""
from __future__ import annotations

import argparse
import sys

from . import report
from .errors import InternalInconsistency, NakayamaError
from .kupisch import parse_sequence
from .modarith import parse_module

EXIT_INPUT = 2
EXIT_INTERNAL = 3


def _fmt(v) -> str:
    if isinstance(v, list):
        return "(" + ",".join(map(str, v)) + ")"
    if v is None:
        return "-"
    return str(v)


def render_analysis(rep: dict) -> str:
    lines = [
        f"sequence       {_fmt(rep['input'])}  normalized {_fmt(rep['normalized'])}"
        f" (offset {rep['rotation_offset']})",
        f"kind           {rep['kind']}, n = {rep['n']}",
    ]
    if rep["theta"]:
        t = rep["theta"]
        lines.append(f"theta          d = {t['d']}, regular {_fmt(t['regular'])}, "
                     f"perfect {_fmt(t['perfect'])}")
    c = rep["cartan"]
    lines.append("cartan         " + " ".join(_fmt(r) for r in c["matrix"]))
    lines.append(f"               det {c['det']}, rank {c['rank']}, "
                 f"invariant factors {_fmt(c['snf']['invariant_factors'])}, "
                 f"free rank {c['snf']['free_rank']}")
    lines.append(f"gl.dim         {rep['gl_dim']}")
    lines.append(f"fin.dim        {rep['fin_dim']}")
    cls = rep["class"]
    v = f" (v.dim {cls['v_dim']})" if cls["v_dim"] is not None else ""
    lines.append(f"class          {cls['name']}{v}")
    gp = rep["gp_modules"]
    lines.append("GP modules     " + (", ".join(
        f"{g['module']} [period {g['period']}, P {_fmt(g['proj_indices'])}, "
        f"nu {_fmt(g['valuations'])}]" for g in gp) if gp else "none"))
    ret = rep["retraction"]
    lines.append("retraction     " + " -> ".join(_fmt(x) for x in ret["chain"])
                 + f"  (r = {ret['r']})")
    s = rep["singularity"]
    if s["trivial"]:
        lines.append("D_sg           trivial")
    else:
        lines.append(f"D_sg           stable category of {_fmt(ret['terminal'])}: "
                     f"tube rank {s['tube_rank']}, Loewy length {s['terminal_loewy']}")
    lines.append(f"K_0(D_sg)      {s['k0']}")
    return "\n".join(lines)


def render_retraction(rep: dict) -> str:
    if not rep["steps"]:
        return f"{_fmt(rep['input'])} is self-injective: zero steps (r = 0)"
    lines = []
    for i, s in enumerate(rep["steps"], 1):
        lines.append(
            f"step {i}: {_fmt(s['source'])} --[kill S_{s['localized_simple']}]--> "
            f"{_fmt(s['target'])}   det {s['det'][0]} = {s['det'][1]}, "
            f"rank {s['rank'][0]} -> {s['rank'][1]}, Cok {s['cokernel'][0]} = {s['cokernel'][1]}")
    lines.append(f"r = {rep['r']}, terminal {_fmt(rep['terminal'])}")
    return "\n".join(lines)


def render_module(rep: dict) -> str:
    lines = [
        f"module         S_{rep['top']}^[{rep['module'].split(':')[1]}] over {_fmt(rep['sequence'])}",
        f"top/socle      S_{rep['top']} / S_{rep['socle']}",
        f"projective     {rep['projective']}   injective {rep['injective']}",
        f"proj.dim       {rep['proj_dim']}",
        f"inj.dim        {rep['inj_dim']}",
        "syzygy orbit   " + " -> ".join(rep["syzygy_orbit"])
        + (f" -> {rep['orbit_returns_to']} (repeat)" if rep["orbit_returns_to"] else " -> 0"),
    ]
    if "resolution" in rep:
        lines.append("resolution     " + ", ".join(f"P_{p} (nu {v})" for p, v in rep["resolution"]))
    gp = rep["gp"]
    if gp["verdict"] == "GP":
        cert = gp["certificate"]
        lines.append(f"GP             yes: period {cert['period']}, "
                     f"projectives {_fmt(cert['proj_indices'])}, valuations {_fmt(cert['valuations'])}, "
                     f"verified {gp['verified']}")
    elif gp["verdict"] == "projective":
        lines.append("GP             projective")
    else:
        lines.append(f"GP             no ({gp['reason']}): {gp['detail']}")
    return "\n".join(lines)


SURVEY_COLUMNS = ["sequence", "class", "v_dim", "gl_dim", "fin_dim", "d", "r", "det", "gp_count"]


def render_survey(rows: list[dict]) -> str:
    table = [SURVEY_COLUMNS] + [[_fmt(r[c]) for c in SURVEY_COLUMNS] for r in rows]
    widths = [max(len(t[i]) for t in table) for i in range(len(SURVEY_COLUMNS))]
    return "\n".join("  ".join(cell.ljust(w) for cell, w in zip(t, widths)).rstrip()
                     for t in table)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="nakayama", description=__doc__.split("\n\n")[0])
    sub = p.add_subparsers(dest="command", required=True)

    an = sub.add_parser("analyze", help="full report for one algebra")
    an.add_argument("seq")
    an.add_argument("--json", action="store_true")

    rt = sub.add_parser("retract", help="left retraction sequence")
    rt.add_argument("seq")
    rt.add_argument("--steps", default="all", help="'all' or a number of steps")
    rt.add_argument("--json", action="store_true")

    md = sub.add_parser("module", help="inspect one indecomposable S_j^[l]")
    md.add_argument("seq")
    md.add_argument("module", help="j:l")
    md.add_argument("--json", action="store_true")

    sv = sub.add_parser("survey", help="classify all normalized sequences in a range")
    sv.add_argument("--n", type=int, required=True, help="largest number of simples")
    sv.add_argument("--max-loewy", type=int, required=True)
    sv.add_argument("--exact", action="store_true", help="only sequences of length exactly n")
    sv.add_argument("--json", action="store_true")
    return p


def run(args) -> tuple[object, str]:
    if args.command == "analyze":
        rep = report.analyze(parse_sequence(args.seq))
        return rep, render_analysis(rep)
    if args.command == "retract":
        if args.steps == "all":
            limit = None
        elif args.steps.isdigit():
            limit = int(args.steps)
        else:
            raise NakayamaError(f"--steps must be 'all' or a nonnegative integer, got {args.steps!r}")
        rep = report.retraction_report(parse_sequence(args.seq), limit)
        return rep, render_retraction(rep)
    if args.command == "module":
        rep = report.module_report(parse_sequence(args.seq), parse_module(args.module))
        return rep, render_module(rep)
    if args.command == "survey":
        if args.n < 1 or args.max_loewy < 1:
            raise NakayamaError("--n and --max-loewy must be at least 1")
        rows = report.survey(args.n, args.max_loewy, exact=args.exact)
        return rows, render_survey(rows)
    raise AssertionError(args.command)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        payload, text = run(args)
    except NakayamaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InternalInconsistency as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    print(report.dumps(payload) if args.json else text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
