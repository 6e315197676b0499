"""Command-line surface tying the analyses together.

Exit codes: 0 success, 1 a checked property is negative (not
semidistributive, not an EL-labeling, interval not nuclear, no certifying
order found), 2 input or usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .canonical import canonical_join_complex, cjr, cmr
from .cores import (
    clo_down,
    clo_up,
    core_data,
    is_conuclear,
    is_nuclear,
    kappa_order,
)
from .errors import LatticeError
from .generators import generate
from .irreducibles import irreducible_table, kappa_bar_cycles
from .jsonio import emit_dot, emit_json, parse_json, to_document
from .sequences import enumerate_kd_exceptional, label_clo_up
from .shelling import LabeledPoset, find_el_order, is_el_labeling, lattice_j_labeling

_DERIVED = {"kappa": kappa_order, "cloUp": clo_up, "cloDown": clo_down}


def _load(path: str):
    return parse_json(Path(path).read_text(encoding="utf-8"))


def _load_lattice(path: str):
    obj = _load(path)
    return obj.poset if isinstance(obj, LabeledPoset) else obj


def _emit(args, human_lines, payload) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in human_lines:
            print(line)


def _cmd_check(args) -> int:
    lattice = _load_lattice(args.file)
    witness = lattice.semidistributivity_witness()
    sd = witness is None
    lines = [
        f"lattice OK: {len(lattice)} elements, {len(lattice.covers)} covers",
        "semidistributive: yes" if sd else f"not semidistributive: witness {witness}",
    ]
    payload = {
        "elements": len(lattice),
        "covers": len(lattice.covers),
        "semidistributive": sd,
        "witness": list(witness) if witness else None,
    }
    _emit(args, lines, payload)
    return 0 if sd else 1


def _cmd_kappa(args) -> int:
    lattice = _load_lattice(args.file)
    table = irreducible_table(lattice)
    cycles = kappa_bar_cycles(lattice)
    lines = [
        "cji: " + ", ".join(table.cji),
        "cmi: " + ", ".join(table.cmi),
    ]
    lines += [f"kappa({j}) = {table.kappa[j]}   (j_* = {table.jstar[j]})" for j in table.cji]
    lines += [f"kappa_d({m}) = {table.kappa_d[m]}   (m^* = {table.mstar[m]})" for m in table.cmi]
    lines.append(f"kappa_bar cycles: {cycles}")
    payload = {
        "cji": list(table.cji),
        "cmi": list(table.cmi),
        "jstar": table.jstar,
        "mstar": table.mstar,
        "kappa": table.kappa,
        "kappaD": table.kappa_d,
        "kappaBarCycles": cycles,
    }
    _emit(args, lines, payload)
    return 0


def _cmd_cjr(args) -> int:
    lattice = _load_lattice(args.file)
    elements = [args.element] if args.element else list(sorted(lattice.names))
    lines = []
    payload = {}
    for x in elements:
        if x not in lattice.index:
            raise LatticeError(f"unknown element {x!r}")
        join_rep = cjr(lattice, x).joinands
        meet_rep = cmr(lattice, x).joinands
        lines.append(f"CJR({x}) = {{{', '.join(join_rep)}}}")
        lines.append(f"CMR({x}) = {{{', '.join(meet_rep)}}}")
        payload[x] = {"cjr": list(join_rep), "cmr": list(meet_rep)}
    _emit(args, lines, payload)
    return 0


def _cmd_complex(args) -> int:
    lattice = _load_lattice(args.file)
    complex_ = canonical_join_complex(lattice)
    edges = sorted(tuple(sorted(e)) for e in complex_.edges)
    lines = ["vertices: " + ", ".join(complex_.vertices)]
    lines += [f"edge: {a} -- {b}" for a, b in edges]
    payload = {"vertices": list(complex_.vertices), "edges": [list(e) for e in edges]}
    _emit(args, lines, payload)
    return 0


def _cmd_cores(args) -> int:
    lattice = _load_lattice(args.file)
    elements = [args.element] if args.element else list(sorted(lattice.names))
    lines = []
    payload = {}
    for x in elements:
        if x not in lattice.index:
            raise LatticeError(f"unknown element {x!r}")
        data = core_data(lattice, x)
        lines.append(
            f"{x}: pop_down={data.pop_down} pop_up={data.pop_up} "
            f"core_down=[{data.core_down.lo}, {data.core_down.hi}] "
            f"core_up=[{data.core_up.lo}, {data.core_up.hi}]"
        )
        lines.append(
            f"   lab_down={{{', '.join(data.lab_down)}}} "
            f"lab_up={{{', '.join(data.lab_up)}}} W={{{', '.join(data.w_set)}}}"
        )
        payload[x] = {
            "popDown": data.pop_down,
            "popUp": data.pop_up,
            "coreDown": [data.core_down.lo, data.core_down.hi],
            "coreUp": [data.core_up.lo, data.core_up.hi],
            "labDown": list(data.lab_down),
            "labUp": list(data.lab_up),
            "w": list(data.w_set),
        }
    _emit(args, lines, payload)
    return 0


def _cmd_orders(args) -> int:
    lattice = _load_lattice(args.file)
    derived = _DERIVED[args.which](lattice)
    if args.dot:
        labels = None
        if args.which == "cloUp" and args.labels:
            labels = label_clo_up(lattice).labels
        print(emit_dot(derived, labels=labels, graph_name=args.which), end="")
        return 0
    covers = derived.covers_named()
    lattice_flag = derived.is_lattice()
    lines = [f"{args.which} covers ({len(covers)}):"]
    lines += [f"  {lo} < {hi}" for lo, hi in covers]
    lines.append("forms a lattice: " + ("yes" if lattice_flag else "no"))
    payload = {
        "kind": args.which,
        "covers": [list(c) for c in covers],
        "isLattice": lattice_flag,
    }
    _emit(args, lines, payload)
    return 0


def _cmd_nuclear(args) -> int:
    lattice = _load_lattice(args.file)
    nuclear = is_nuclear(lattice, args.lo, args.hi)
    conuclear = is_conuclear(lattice, args.lo, args.hi)
    lines = [
        f"[{args.lo}, {args.hi}] nuclear: " + ("yes" if nuclear else "no"),
        f"[{args.lo}, {args.hi}] conuclear: " + ("yes" if conuclear else "no"),
    ]
    payload = {"lo": args.lo, "hi": args.hi, "nuclear": nuclear, "conuclear": conuclear}
    _emit(args, lines, payload)
    return 0 if nuclear and conuclear else 1


def _cmd_seq(args) -> int:
    lattice = _load_lattice(args.file)
    seqs = enumerate_kd_exceptional(
        lattice, maximal_only=args.maximal, mark_right_extendable=args.maximal
    )
    lines = []
    for s in seqs:
        suffix = ""
        if s.right_extendable:
            suffix = "   [extendable to the right]"
        lines.append("(" + ",".join(s.entries) + ")" + suffix)
    lines.append(f"count: {len(seqs)}")
    payload = {
        "maximalOnly": args.maximal,
        "count": len(seqs),
        "sequences": [
            {"entries": list(s.entries), "rightExtendable": s.right_extendable}
            for s in seqs
        ],
    }
    _emit(args, lines, payload)
    return 0


def _cmd_el(args) -> int:
    obj = _load(args.file)
    if not isinstance(obj, LabeledPoset):
        raise LatticeError("el requires a document with a 'labels' field")
    if args.search:
        order = find_el_order(obj)
        found = order is not None
        lines = ["certifying order: " + (" < ".join(order) if found else "none found")]
        payload = {"order": list(order) if found else None}
        _emit(args, lines, payload)
        return 0 if found else 1
    order = tuple(args.order.split(","))
    report = is_el_labeling(obj, order)
    lines = ["EL-labeling: " + ("yes" if report.ok else "no")]
    payload = {"order": list(order), "el": report.ok, "witness": None}
    if not report.ok:
        w = report.witness
        lines.append(
            f"witness interval [{w.interval[0]}, {w.interval[1]}]: {w.kind}; "
            f"chains {w.chains} with words {w.words}"
        )
        payload["witness"] = {
            "interval": list(w.interval),
            "kind": w.kind,
            "chains": [list(c) for c in w.chains],
            "words": [list(c) for c in w.words],
        }
    _emit(args, lines, payload)
    return 0 if report.ok else 1


def _cmd_gen(args) -> int:
    obj = generate(args.family, args.n)
    meta = {"family": args.family}
    if args.n is not None:
        meta["n"] = str(args.n)
    text = emit_json(to_document(obj, meta=meta))
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
        print(f"wrote {args.output}")
    else:
        print(text, end="")
    return 0


def _cmd_dot(args) -> int:
    obj = _load(args.file)
    lattice = obj.poset if isinstance(obj, LabeledPoset) else obj
    if args.derived:
        derived = _DERIVED[args.derived](lattice)
        labels = None
        if args.labeling == "clo":
            if args.derived != "cloUp":
                raise LatticeError("labeling 'clo' applies only to --derived cloUp")
            labels = label_clo_up(lattice).labels
        elif args.labeling:
            raise LatticeError("derived posets accept only the 'clo' labeling")
        print(emit_dot(derived, labels=labels, graph_name=args.derived), end="")
        return 0
    labels = None
    if args.labeling == "j":
        labels = lattice_j_labeling(lattice).labels
    elif args.labeling == "m":
        from .irreducibles import cover_labeling

        labels = cover_labeling(lattice).mlabel
    elif args.labeling == "custom":
        if not isinstance(obj, LabeledPoset):
            raise LatticeError("labeling 'custom' requires labels in the document")
        labels = obj.labels
    elif args.labeling == "clo":
        raise LatticeError("labeling 'clo' applies only to --derived cloUp")
    print(emit_dot(lattice, labels=labels), end="")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sdlat", description="Analyze finite semidistributive lattices."
    )
    parser.add_argument("--version", action="version", version=f"sdlat {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(func=func)
        p.add_argument("--json", action="store_true", help="machine-readable output")
        return p

    p = add("check", _cmd_check, help="validate a lattice file and test semidistributivity")
    p.add_argument("file")

    p = add("kappa", _cmd_kappa, help="irreducibles, kappa table, kappa_bar cycles")
    p.add_argument("file")

    p = add("cjr", _cmd_cjr, help="canonical join/meet representations")
    p.add_argument("file")
    p.add_argument("--element")

    p = add("complex", _cmd_complex, help="canonical join complex edges")
    p.add_argument("file")

    p = add("cores", _cmd_cores, help="pop operators, cores, and label sets")
    p.add_argument("file")
    p.add_argument("--element")

    p = add("orders", _cmd_orders, help="derived orders: kappa or core label orders")
    p.add_argument("file")
    p.add_argument("--which", required=True, choices=sorted(_DERIVED))
    p.add_argument("--dot", action="store_true")
    p.add_argument("--labels", action="store_true", help="with --dot on cloUp: recursive labels")

    p = add("nuclear", _cmd_nuclear, help="nuclear/conuclear test for an interval")
    p.add_argument("file")
    p.add_argument("--lo", required=True)
    p.add_argument("--hi", required=True)

    p = add("seq", _cmd_seq, help="kappa_d-exceptional sequences")
    p.add_argument("file")
    p.add_argument("--maximal", action="store_true")

    p = add("el", _cmd_el, help="EL-labeling check or certifying-order search")
    p.add_argument("file")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--order", help="comma-separated labels, smallest first")
    group.add_argument("--search", action="store_true")

    p = add("gen", _cmd_gen, help="emit a built-in family as JSON")
    p.add_argument("family")
    p.add_argument("n", nargs="?", type=int, default=None)
    p.add_argument("-o", "--output")

    p = add("dot", _cmd_dot, help="Graphviz export of the Hasse diagram")
    p.add_argument("file")
    p.add_argument("--labeling", choices=["j", "m", "custom", "clo"])
    p.add_argument("--derived", choices=sorted(_DERIVED))
    return parser


def cli_main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except LatticeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(cli_main())
