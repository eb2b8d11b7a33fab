"""Command line front end.

Exit codes: 0 when every check passes, 1 when a violation is found (or a
required enumeration was truncated), 2 for usage and format errors.
"""
from __future__ import annotations

import argparse
import json
import sys

from .chains import format_name
from .io import FormatError, adc_to_json, load_adc, load_json
from .steiner import (Cell, atom_table, check_loop_free, check_strongly_loop_free,
                      check_unitary, default_cap, enumerate_cells, enumerate_hom,
                      globular_from_cells)
from .adc import validate_adc

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def _dump(data):
    return json.dumps(data, indent=2, ensure_ascii=False)


def _atom_label(name):
    return f"<{format_name(name)}>"


def cmd_oriental(args):
    from .simplicial import oriental
    if args.n < 0:
        raise FormatError("N must be nonnegative")
    K = oriental(args.n)
    atoms = [(p, name, atom_table(K, (p, name))) for p, name in K.elements()]
    if args.json:
        data = adc_to_json(K)
        data["atoms"] = [{"name": format_name(name), "cell": cell.to_json()}
                         for _, name, cell in atoms]
        return _dump(data), EXIT_OK
    lines = [f"O_{args.n}"]
    for p in range(K.max_degree + 1):
        lines.append(f"dim {p}")
        for q, name, cell in atoms:
            if q != p:
                continue
            if p == 0:
                lines.append(f"  {format_name(name)}")
            else:
                lines.append(f"  {_atom_label(name)} = {cell}")
                lines.extend("    " + row for row in cell.table().splitlines())
    return "\n".join(lines), EXIT_OK


def cmd_check_base(args):
    K = load_adc(load_json(args.file))
    reports = [validate_adc(K), check_unitary(K), check_loop_free(K),
               check_strongly_loop_free(K)]
    code = EXIT_OK if all(r.ok for r in reports) else EXIT_VIOLATION
    if args.json:
        return _dump([r.to_json() for r in reports]), code
    return "\n".join(str(r) for r in reports), code


def _contraction_from(args):
    from .contraction import Contraction, dual_contraction, standard_contraction
    from .simplicial import standard_simplex_adc
    data = load_json(args.file)
    if isinstance(data, dict) and "h" in data:
        if "complex" in data:
            K = load_adc(data["complex"])
        elif args.complex:
            K = load_adc(load_json(args.complex))
        else:
            raise FormatError("contraction JSON needs a 'complex' entry or --complex FILE")
        try:
            c = Contraction.from_json(data, K)
        except ValueError as exc:
            raise FormatError(str(exc)) from None
        if args.dual:
            c.dual = True
        return c
    K = load_adc(data)
    n = K.max_degree
    if n < 0 or K.basis != standard_simplex_adc(n).basis or K != standard_simplex_adc(n):
        raise FormatError("without an explicit 'h' only standard simplices are supported")
    return dual_contraction(n) if args.dual else standard_contraction(n)


def cmd_check_contraction(args):
    from .contraction import validate_contraction
    c = _contraction_from(args)
    report = validate_contraction(c)
    code = EXIT_OK if report.ok else EXIT_VIOLATION
    if args.json:
        return _dump(report.to_json()), code
    return str(report), code


def _cap(args):
    return args.cap if args.cap is not None else default_cap()


def cmd_enumerate(args):
    K = load_adc(load_json(args.file))
    cells, truncated = enumerate_cells(K, args.dim, _cap(args))
    counts = [sum(1 for c in cells if c.dim == d) for d in range(args.dim + 1)]
    code = EXIT_VIOLATION if (truncated and args.require_complete) else EXIT_OK
    if args.json:
        return _dump({"counts": counts, "truncated": truncated,
                      "cells": [c.to_json() for c in cells]}), code
    lines = [f"counts by dimension: {'/'.join(map(str, counts))}",
             f"truncated: {str(truncated).lower()}"]
    for d in range(args.dim + 1):
        lines.append(f"dim {d}")
        lines.extend(f"  {c}" for c in cells if c.dim == d)
    if truncated and args.require_complete:
        lines.append("enumeration truncated by the cap; completeness was required")
    return "\n".join(lines), code


def cmd_nerve(args):
    from .simplicial import nerve_simplices
    K = load_adc(load_json(args.file))
    counts, truncated = [], False
    for k in range(args.n + 1):
        found, cut = nerve_simplices(K, k, _cap(args))
        counts.append(len(found))
        truncated = truncated or cut
    if args.json:
        return _dump({"counts": counts, "truncated": truncated}), EXIT_OK
    lines = [f"{k}-simplices: {count}" for k, count in enumerate(counts)]
    lines.append(f"truncated: {str(truncated).lower()}")
    return "\n".join(lines), EXIT_OK


def _load_cell(text, K):
    try:
        data = json.loads(text)
    except json.JSONDecodeError:
        data = load_json(text)
    try:
        return Cell.from_json(data, K)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def cmd_hom(args):
    from .contraction import quasi_final_brute, quasi_initial_brute
    from .steiner import validate_cell
    K = load_adc(load_json(args.file))
    x, y = _load_cell(args.source, K), _load_cell(args.target, K)
    for label, cell in (("--from", x), ("--to", y)):
        problems = validate_cell(cell, K)
        if problems:
            raise FormatError(f"{label} is not a cell:\n{problems}")
    depth = args.depth if args.depth is not None else max(K.max_degree - x.dim - 1, 0)
    try:
        cells, truncated = enumerate_hom(K, x, y, depth, _cap(args))
    except ValueError as exc:
        raise FormatError(str(exc)) from None
    data = globular_from_cells(cells, depth, offset=x.dim + 1)
    initial = final = []
    if not truncated:
        objects = data.cells_by_dim[0]
        initial = [c for c in objects if quasi_initial_brute(data, c, depth)]
        final = [c for c in objects if quasi_final_brute(data, c, depth)]
    code = EXIT_VIOLATION if truncated else EXIT_OK
    if args.json:
        return _dump({"levels": [[c.to_json() for c in level] for level in data.cells_by_dim],
                      "truncated": truncated,
                      "quasi_initial": [c.to_json() for c in initial],
                      "quasi_final": [c.to_json() for c in final]}), code
    lines = [f"Hom cells by level: {'/'.join(str(len(l)) for l in data.cells_by_dim)}",
             f"truncated: {str(truncated).lower()}"]
    for level, cells_at in enumerate(data.cells_by_dim):
        lines.append(f"level {level}")
        lines.extend(f"  {c}" for c in cells_at)
    if truncated:
        lines.append("enumeration truncated; quasi-initial objects not decided")
    else:
        lines.append("quasi-initial objects: " + (", ".join(map(str, initial)) or "none"))
        lines.append("quasi-final objects: " + (", ".join(map(str, final)) or "none"))
    return "\n".join(lines), code


def cmd_truncate2(args):
    from .homcat import compare_truncation2, truncation2_of_poset_oriental
    from .simplicial import Poset
    data = load_json(args.poset)
    if not isinstance(data, dict) or "elements" not in data:
        raise FormatError(f"{args.poset}: poset JSON needs 'elements'")
    try:
        E = Poset(data["elements"], data.get("leq", []))
    except ValueError as exc:
        raise FormatError(f"{args.poset}: {exc}") from None
    two = truncation2_of_poset_oriental(E)
    report = compare_truncation2(E, _cap(args)) if args.verify else None
    code = EXIT_OK if report is None or report.ok else EXIT_VIOLATION
    if args.json:
        out = two.to_json()
        if report is not None:
            out["verification"] = report.to_json()
        return _dump(out), code
    lines = ["objects: " + ", ".join(map(str, E.elements))]
    for entry in two.to_json()["homs"]:
        if entry["from"] == entry["to"]:
            continue
        lines.append(f"Hom({entry['from']}, {entry['to']})")
        lines.extend("  {" + ",".join(map(str, S)) + "}" for S in entry["objects"])
        lines.extend("  {" + ",".join(map(str, a)) + "} ⊂ {" + ",".join(map(str, b)) + "}"
                     for a, b in entry["order"])
    if report is not None:
        lines.append(str(report))
    return "\n".join(lines), code


def cmd_selftest(args):
    from .acceptance import run_all
    results = run_all()
    if args.json:
        return _dump([r.to_json() for r in results]), \
            EXIT_OK if all(r.passed for r in results) else EXIT_VIOLATION
    lines = [str(r) for r in results]
    return "\n".join(lines), EXIT_OK if all(r.passed for r in results) else EXIT_VIOLATION


def build_parser():
    parser = _Parser(prog="orientals", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def command(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.set_defaults(func=func)
        return p

    p = command("oriental", cmd_oriental, "print the atoms of O_N")
    p.add_argument("n", type=int, metavar="N")
    p = command("check-base", cmd_check_base, "unitary / loop-free / strongly loop-free checks")
    p.add_argument("file")
    p = command("check-contraction", cmd_check_contraction, "validate a contraction")
    p.add_argument("file")
    p.add_argument("--dual", action="store_true")
    p.add_argument("--complex", help="complex JSON when the contraction file has none")
    p = command("enumerate", cmd_enumerate, "enumerate cells under a coefficient cap")
    p.add_argument("file")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--cap", type=int)
    p.add_argument("--require-complete", action="store_true")
    p = command("nerve", cmd_nerve, "count simplices of the nerve")
    p.add_argument("file")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--cap", type=int)
    p = command("hom", cmd_hom, "cells of a Hom category")
    p.add_argument("file")
    p.add_argument("--from", dest="source", required=True, metavar="CELL")
    p.add_argument("--to", dest="target", required=True, metavar="CELL")
    p.add_argument("--depth", type=int)
    p.add_argument("--cap", type=int)
    p = command("truncate2", cmd_truncate2, "2-truncation of a poset oriental")
    p.add_argument("poset")
    p.add_argument("--verify", action="store_true", help="compare with the enumerated τ₂")
    p.add_argument("--cap", type=int)
    command("selftest", cmd_selftest, "run the acceptance suite")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        text, code = args.func(args)
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
