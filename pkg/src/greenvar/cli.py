"""Command-line front end: compute, verify, count, audit, and export.

Six subcommands cover the workflow:

    green    classes of one relation on one variant semigroup
    verify   sweep deformations, cross-checking closed forms against brute force
    count    audit the class-count formulas against enumeration
    eggbox   d-class grids as DOT or JSON
    iso      witness an isomorphism between (IS_n, *_a) and (IS_n, *_b)
    dual     check that inversion maps (IS_n, *_{a^-1}) anti-isomorphically
             onto (IS_n, *_a) and swaps the r- and l-partitions

Exit codes: 0 success; 1 a checked property failed (green with method=both
on a class mismatch, verify and count on any corrected-mode discrepancy,
iso and dual on verification failure); 2 usage or capacity errors.
Literal-mode discrepancies are findings, reported with exit 0.

Output is deterministic byte-for-byte for a fixed invocation.  JSON output
validates against output_schema.json shipped in this package.  Member
lists longer than MEMBER_LIMIT are elided unless --full is given.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import re
import sys
from collections.abc import Sequence

from .closedform_is import (
    CLOSED_RELATIONS,
    MODES,
    ISCountReport,
    closed_classification_is,
    count_is_classes,
)
from .closedform_t import TCountReport, closed_classification_t, count_t_classes
from .elements import (
    FAMILIES,
    FAMILY_IS,
    FAMILY_T,
    CapacityError,
    Element,
    ParseError,
    enumerate_family,
    parse_element,
)
from .engine import (
    EggBox,
    GreenClassification,
    RELATIONS,
    all_egg_boxes,
    brute_classification,
    egg_box,
    variant_semigroup,
    verify_d_equals_j,
)
from .structure import (
    dual_check,
    iso_preserves_classes,
    iso_witness,
    rank_representative,
    verify_isomorphism,
)

MEMBER_LIMIT = 50  # longest member list printed without --full
DEFAULT_SEED = 7
ALL_A_CAP = 4  # --all-a sweeps stop here; sample larger universes instead

VERIFY_RELATIONS = ("r", "l", "h", "d")


# ---------------------------------------------------------------------------
# argument plumbing


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return value


def _parse_or_error(parser: argparse.ArgumentParser, family: str, n: int, text: str) -> Element:
    try:
        x = parse_element(family, text)
    except ParseError as exc:
        parser.error(str(exc))
    if x.n != n:
        parser.error(f"element {text!r} has {x.n} points, expected n={n}")
    return x


def _add_selection(sub: argparse.ArgumentParser, *, rank_reps: bool) -> None:
    group = sub.add_mutually_exclusive_group(required=True)
    group.add_argument("--a", help="one deformation, element text like 2,-,1")
    group.add_argument(
        "--all-a", action="store_true", help=f"every deformation (n <= {ALL_A_CAP})"
    )
    if rank_reps:
        group.add_argument(
            "--rank-reps",
            action="store_true",
            help="one deformation per rank (family is only)",
        )
    group.add_argument(
        "--sample", type=_positive_int, metavar="K", help="K seeded-random deformations"
    )
    sub.add_argument(
        "--seed", type=int, default=DEFAULT_SEED, help=f"sampling seed (default {DEFAULT_SEED})"
    )


def _select_deformations(
    parser: argparse.ArgumentParser, args: argparse.Namespace, family: str, n: int
) -> list[Element]:
    if args.a is not None:
        return [_parse_or_error(parser, family, n, args.a)]
    if getattr(args, "rank_reps", False):
        if family != FAMILY_IS:
            parser.error(
                "--rank-reps is only justified for family is; use --all-a or --sample"
            )
        return [rank_representative(n, k) for k in range(n + 1)]
    if args.all_a:
        if n > ALL_A_CAP:
            parser.error(f"--all-a is capped at n <= {ALL_A_CAP}; use --sample")
        return list(enumerate_family(family, n))
    universe = enumerate_family(family, n)
    if args.sample > len(universe):
        parser.error(f"--sample {args.sample} exceeds the universe size {len(universe)}")
    rng = random.Random(args.seed)
    return sorted(rng.sample(universe, args.sample))


def _closed_classification(
    family: str, n: int, a: Element, relation: str, mode: str
) -> GreenClassification:
    if family == FAMILY_IS:
        return closed_classification_is(n, a, relation, mode)
    return closed_classification_t(n, a, relation, mode)


def _count_report(family: str, n: int, a: Element) -> ISCountReport | TCountReport:
    if family == FAMILY_IS:
        return count_is_classes(n, a)
    return count_t_classes(n, a)


# ---------------------------------------------------------------------------
# shared rendering


def _class_entry(cls: tuple[Element, ...], full: bool) -> dict:
    members = None
    if full or len(cls) <= MEMBER_LIMIT:
        members = [str(x) for x in cls]
    return {"representative": str(cls[0]), "size": len(cls), "members": members}


def _classification_payload(c: GreenClassification, full: bool) -> dict:
    return {
        "method": c.method,
        "class_count": len(c.classes),
        "singleton_count": c.singleton_count,
        "classes": [_class_entry(cls, full) for cls in c.classes],
    }


def _classification_text(c: GreenClassification, full: bool) -> list[str]:
    lines = [
        f"{c.method}: {len(c.classes)} classes ({c.singleton_count} singletons)"
    ]
    for i, cls in enumerate(c.classes):
        head = f"  [{i}] size {len(cls)} rep {cls[0]}"
        if len(cls) == 1:
            lines.append(head)
        elif full or len(cls) <= MEMBER_LIMIT:
            lines.append(head + ": " + " ".join(str(x) for x in cls))
        else:
            lines.append(head + " (members elided; --full to show)")
    return lines


def _emit_json(payload: dict) -> None:
    sys.stdout.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")


def _emit_text(lines: list[str]) -> None:
    sys.stdout.write("\n".join(lines) + "\n")


def _first_divergence(
    closed: GreenClassification, brute: GreenClassification
) -> tuple[Element, tuple[Element, ...], tuple[Element, ...]]:
    for cls in brute.classes:
        x = cls[0]
        if set(closed.class_of(x)) != set(cls):
            return x, closed.class_of(x), cls
    raise AssertionError("partitions differ but every class matched")


# ---------------------------------------------------------------------------
# green


def cmd_green(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    family, n, relation = args.family, args.n, args.relation
    a = _parse_or_error(parser, family, n, args.a)
    method = args.method
    if method is None:
        method = "brute" if relation == "j" else "both"
    if relation == "j" and method != "brute":
        parser.error("relation j has no closed form; use --method brute")
    if relation not in CLOSED_RELATIONS and method != "brute":
        parser.error(f"closed forms cover {'/'.join(CLOSED_RELATIONS)}")

    modes = list(MODES) if args.mode == "both" else [args.mode]
    results: list[GreenClassification] = []
    if method in ("brute", "both"):
        results.append(brute_classification(family, n, a, relation))
    if method in ("closed", "both"):
        results.extend(
            _closed_classification(family, n, a, relation, mode) for mode in modes
        )

    agreement = None
    exit_code = 0
    if method == "both":
        brute = results[0]
        agreement = [
            {"closed": c.method, "matches_brute": c.same_partition(brute)}
            for c in results[1:]
        ]
        if not all(entry["matches_brute"] for entry in agreement):
            exit_code = 1

    if args.format == "json":
        _emit_json(
            {
                "command": "green",
                "family": family,
                "n": n,
                "a": str(a),
                "relation": relation,
                "method": method,
                "mode": args.mode,
                "results": [_classification_payload(c, args.full) for c in results],
                "agreement": agreement,
            }
        )
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(
            ["family", "n", "a", "relation", "method", "class_index", "size",
             "representative", "members"]
        )
        for c in results:
            for i, cls in enumerate(c.classes):
                shown = args.full or len(cls) <= MEMBER_LIMIT
                writer.writerow(
                    [family, n, str(a), relation, c.method, i, len(cls), str(cls[0]),
                     " ".join(str(x) for x in cls) if shown else ""]
                )
        sys.stdout.write(buf.getvalue())
    else:
        lines = [
            f"green family={family} n={n} a=\"{a}\" relation={relation}"
            f" method={method} mode={args.mode}"
        ]
        for c in results:
            lines.extend(_classification_text(c, args.full))
        if agreement is not None:
            for c, entry in zip(results[1:], agreement):
                if entry["matches_brute"]:
                    lines.append(f"diff {c.method} vs brute: none")
                else:
                    x, closed_cls, brute_cls = _first_divergence(c, results[0])
                    lines.append(
                        f"diff {c.method} vs brute: class of {x} differs;"
                        f" {c.method} has {{{' '.join(str(y) for y in closed_cls)}}},"
                        f" brute has {{{' '.join(str(y) for y in brute_cls)}}}"
                    )
        _emit_text(lines)
    return exit_code


# ---------------------------------------------------------------------------
# verify


def _verify_one(family: str, n: int, a: Element) -> dict:
    v = variant_semigroup(family, n, a)
    corrected = {}
    for relation in VERIFY_RELATIONS:
        brute = brute_classification(family, n, a, relation)
        corrected[relation] = _closed_classification(
            family, n, a, relation, "corrected"
        ).same_partition(brute)
    d_equals_j, _ = verify_d_equals_j(v)
    literal_d = _closed_classification(family, n, a, "d", "literal").same_partition(
        brute_classification(family, n, a, "d")
    )
    if family == FAMILY_T and n < 2:
        count_flags: tuple[str, ...] = ()
    else:
        count_flags = _count_report(family, n, a).flags
    return {
        "a": str(a),
        "corrected": corrected,
        "d_equals_j": d_equals_j,
        "literal_d_matches_brute": literal_d,
        "count_flags": list(count_flags),
    }


def cmd_verify(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    family, n = args.family, args.n
    deformations = _select_deformations(parser, args, family, n)
    entries = [_verify_one(family, n, a) for a in deformations]

    corrected_ok = all(
        all(e["corrected"].values())
        and e["d_equals_j"]
        and not any(f.startswith("corrected:") for f in e["count_flags"])
        for e in entries
    )
    drift = sum(1 for e in entries if not e["literal_d_matches_brute"])
    findings = sum(
        1 for e in entries if any(f.startswith("literal:") for f in e["count_flags"])
    )
    summary = {
        "deformation_count": len(entries),
        "corrected_ok": corrected_ok,
        "literal_d_drift_count": drift,
        "count_finding_count": findings,
    }

    if args.format == "json":
        _emit_json(
            {
                "command": "verify",
                "family": family,
                "n": n,
                "relations": list(VERIFY_RELATIONS),
                "deformations": entries,
                "summary": summary,
            }
        )
    else:
        lines = [f"verify family={family} n={n} deformations={len(entries)}"]
        for e in entries:
            parts = [f"a=\"{e['a']}\""]
            parts.extend(
                f"{rel}={'ok' if e['corrected'][rel] else 'MISMATCH'}"
                for rel in VERIFY_RELATIONS
            )
            parts.append(f"d==j={'ok' if e['d_equals_j'] else 'MISMATCH'}")
            parts.append(
                f"literal-d={'ok' if e['literal_d_matches_brute'] else 'drift'}"
            )
            parts.append(
                "counts=" + (",".join(e["count_flags"]) if e["count_flags"] else "ok")
            )
            lines.append("  " + " ".join(parts))
        lines.append(
            "corrected closed forms vs brute force: "
            + ("all agree" if corrected_ok else "MISMATCH (bug)")
        )
        lines.append(
            f"literal d-description drift: {drift} of {len(entries)} deformations"
        )
        lines.append(
            f"literal count findings: {findings} of {len(entries)} deformations"
        )
        _emit_text(lines)
    return 0 if corrected_ok else 1


# ---------------------------------------------------------------------------
# count


def _size_rows(
    side: str,
    literal: tuple[tuple[int, int, int], ...],
    corrected: tuple[tuple[int, int, int], ...],
    enumerated: tuple[tuple[int, int, int], ...],
) -> list[dict]:
    lit = {(k, s): c for k, s, c in literal}
    cor = {(k, s): c for k, s, c in corrected}
    enu = {(k, s): c for k, s, c in enumerated}
    rows = []
    for k, s in sorted(set(lit) | set(cor) | set(enu)):
        rows.append(
            {
                "side": side,
                "quantity": f"classes_rank_{k}_size_{s}",
                "literal_value": lit.get((k, s), 0),
                "corrected_value": cor.get((k, s), 0),
                "enumerated_value": enu.get((k, s), 0),
            }
        )
    return rows


def _scalar_row(side: str, quantity: str, lit: int, cor: int, enu: int) -> dict:
    return {
        "side": side,
        "quantity": quantity,
        "literal_value": lit,
        "corrected_value": cor,
        "enumerated_value": enu,
    }


def _count_rows(report: ISCountReport | TCountReport) -> list[dict]:
    rows: list[dict] = []
    if isinstance(report, ISCountReport):
        for side, enum in (("r", report.enumerated_r), ("l", report.enumerated_l)):
            rows.append(
                _scalar_row(side, "singleton_count", report.singleton_literal,
                            report.singleton_corrected, enum.singleton_count)
            )
            rows.append(
                _scalar_row(side, "multi_class_count", report.multi_class_count,
                            report.multi_class_count, enum.multi_class_count)
            )
            rows.extend(
                _size_rows(side, report.size_lines, report.size_lines, enum.size_lines)
            )
    else:
        rows.append(
            _scalar_row("r", "singleton_count", report.r_singleton,
                        report.r_singleton, report.enumerated_r.singleton_count)
        )
        rows.append(
            _scalar_row("r", "multi_class_count", report.r_multi_count,
                        report.r_multi_count, report.enumerated_r.multi_class_count)
        )
        rows.extend(
            _size_rows("r", report.r_size_lines, report.r_size_lines,
                       report.enumerated_r.size_lines)
        )
        rows.append(
            _scalar_row("l", "singleton_count", report.l_singleton_literal,
                        report.l_singleton_corrected,
                        report.enumerated_l.singleton_count)
        )
        rows.append(
            _scalar_row("l", "multi_class_count", report.l_multi_count_literal,
                        report.l_multi_count_corrected,
                        report.enumerated_l.multi_class_count)
        )
        rows.extend(
            _size_rows("l", report.l_size_lines_literal,
                       report.l_size_lines_corrected, report.enumerated_l.size_lines)
        )
    for row in rows:
        marks = []
        if row["literal_value"] != row["enumerated_value"]:
            marks.append("literal")
        if row["corrected_value"] != row["enumerated_value"]:
            marks.append("corrected")
        row["flag"] = ",".join(marks)
    return rows


def cmd_count(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    family, n = args.family, args.n
    if family == FAMILY_T and n < 2:
        parser.error("count needs n >= 2 for family t")
    deformations = _select_deformations(parser, args, family, n)
    reports = [_count_report(family, n, a) for a in deformations]
    tables = [
        {"a": str(rep.a), "p": rep.p, "rows": _count_rows(rep)} for rep in reports
    ]
    exit_code = (
        1
        if any("corrected" in row["flag"] for t in tables for row in t["rows"])
        else 0
    )

    if args.format == "json":
        _emit_json(
            {"command": "count", "family": family, "n": n, "reports": tables}
        )
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(
            ["family", "n", "a", "p", "side", "quantity", "literal_value",
             "corrected_value", "enumerated_value", "flag"]
        )
        for t in tables:
            for row in t["rows"]:
                writer.writerow(
                    [family, n, t["a"], t["p"], row["side"], row["quantity"],
                     row["literal_value"], row["corrected_value"],
                     row["enumerated_value"], row["flag"]]
                )
        sys.stdout.write(buf.getvalue())
    else:
        lines = [f"count family={family} n={n} deformations={len(tables)}"]
        for t in tables:
            lines.append(f"a=\"{t['a']}\" p={t['p']}")
            widths = [4, 8, 7, 9, 10, 4]
            header = ("side", "quantity", "literal", "corrected", "enumerated", "flag")
            grid = [header] + [
                (row["side"], row["quantity"], str(row["literal_value"]),
                 str(row["corrected_value"]), str(row["enumerated_value"]),
                 row["flag"])
                for row in t["rows"]
            ]
            widths = [max(len(r[i]) for r in grid) for i in range(6)]
            for r in grid:
                lines.append(
                    "  " + "  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip()
                )
        lines.append(
            "corrected formulas vs enumeration: "
            + ("MISMATCH (bug)" if exit_code else "all agree")
        )
        _emit_text(lines)
    return exit_code


# ---------------------------------------------------------------------------
# eggbox


def _cell_text(cell: tuple[Element, ...], full: bool) -> str:
    if not cell:
        return "&middot;"
    if full:
        return " ".join(str(x) for x in cell)
    if len(cell) == 1:
        return str(cell[0])
    return f"{cell[0]} ({len(cell)})"


def _dot_document(boxes: Sequence[EggBox], family: str, n: int, a: Element, full: bool) -> str:
    lines = ["digraph eggbox {"]
    lines.append(
        f'  label="family={family} n={n} a=\\"{a}\\" d_classes={len(boxes)}";'
    )
    lines.append('  labelloc="t";')
    lines.append("  node [shape=plaintext];")
    for i, box in enumerate(boxes):
        lines.append(f"  subgraph cluster_{i} {{")
        lines.append(
            f'    label="d{i} rep {box.representative} size {len(box.d_class)}'
            f' ({len(box.rows)}x{len(box.cols)})";'
        )
        rows_html = "".join(
            "<TR>"
            + "".join(f"<TD>{_cell_text(cell, full)}</TD>" for cell in row)
            + "</TR>"
            for row in box.cells
        )
        lines.append(
            f'    box{i} [label=<<TABLE BORDER="0" CELLBORDER="1"'
            f' CELLSPACING="0">{rows_html}</TABLE>>];'
        )
        lines.append("  }")
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_eggbox(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    family, n = args.family, args.n
    a = _parse_or_error(parser, family, n, args.a)
    v = variant_semigroup(family, n, a)
    if args.d_rep is not None:
        x = _parse_or_error(parser, family, n, args.d_rep)
        d = brute_classification(family, n, a, "d")
        boxes: tuple[EggBox, ...] = (egg_box(v, d.class_of(x)),)
    else:
        boxes = all_egg_boxes(v)

    if args.format == "json":
        _emit_json(
            {
                "command": "eggbox",
                "family": family,
                "n": n,
                "a": str(a),
                "d_classes": [
                    {
                        "representative": str(box.representative),
                        "size": len(box.d_class),
                        "rows": [str(r[0]) for r in box.rows],
                        "cols": [str(c[0]) for c in box.cols],
                        "cells": [
                            [_class_entry(cell, args.full) for cell in row]
                            for row in box.cells
                        ],
                    }
                    for box in boxes
                ],
            }
        )
    else:
        sys.stdout.write(_dot_document(boxes, family, n, a, args.full))
    return 0


# ---------------------------------------------------------------------------
# iso and dual


def cmd_iso(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    n = args.n
    a = _parse_or_error(parser, FAMILY_IS, n, args.a)
    b = _parse_or_error(parser, FAMILY_IS, n, args.b)
    witness = iso_witness(a, b)
    verified = classes_preserved = None
    counterexample = None
    if witness is not None:
        verified, counterexample = verify_isomorphism(witness)
        classes_preserved = iso_preserves_classes(witness) if verified else False
    exit_code = 0 if witness is None else (0 if verified and classes_preserved else 1)

    if args.format == "json":
        _emit_json(
            {
                "command": "iso",
                "n": n,
                "a": str(a),
                "b": str(b),
                "rank_a": a.rank,
                "rank_b": b.rank,
                "witness": None
                if witness is None
                else {"g": str(witness.g), "h": str(witness.h)},
                "verified": verified,
                "classes_preserved": classes_preserved,
            }
        )
    else:
        lines = [f"iso n={n} a=\"{a}\" b=\"{b}\"", f"rank(a)={a.rank} rank(b)={b.rank}"]
        if witness is None:
            lines.append(
                "rank mismatch: no isomorphism exists between deformations of"
                " unequal rank"
            )
        else:
            lines.append(
                f"witness g={witness.g} h={witness.h}"
                " (phi(x) = h . x . g, with g . b . h = a)"
            )
            if verified:
                lines.append("bijective homomorphism: verified on all pairs")
                lines.append(
                    "class preservation (r l h d): "
                    + ("pass" if classes_preserved else "FAIL")
                )
            else:
                x, y = counterexample
                lines.append(f"verification FAILED at pair ({x}, {y})")
        _emit_text(lines)
    return exit_code


def cmd_dual(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    n = args.n
    if args.a is not None:
        deformations = [_parse_or_error(parser, FAMILY_IS, n, args.a)]
    else:
        if n > ALL_A_CAP:
            parser.error(f"--all-a is capped at n <= {ALL_A_CAP}")
        deformations = list(enumerate_family(FAMILY_IS, n))

    entries = []
    all_ok = True
    for a in deformations:
        report = dual_check(a, check_classes=True)
        ok = report.holds and report.classes_match
        all_ok = all_ok and ok
        entries.append(
            {
                "a": str(a),
                "holds": report.holds,
                "classes_match": report.classes_match,
                "counterexample": report.counterexample,
            }
        )

    if args.format == "json":
        _emit_json(
            {
                "command": "dual",
                "n": n,
                "deformations": [
                    {"a": e["a"], "holds": e["holds"], "classes_match": e["classes_match"]}
                    for e in entries
                ],
                "all_ok": all_ok,
            }
        )
    else:
        lines = [f"dual n={n} deformations={len(entries)}"]
        for e in entries:
            line = (
                f"  a=\"{e['a']}\""
                f" anti-isomorphism={'pass' if e['holds'] else 'FAIL'}"
                f" r-vs-l-classes={'match' if e['classes_match'] else 'FAIL'}"
            )
            if e["counterexample"] is not None:
                x, y = e["counterexample"]
                line += f" counterexample=({x}, {y})"
            lines.append(line)
        lines.append("all deformations pass" if all_ok else "FAIL")
        _emit_text(lines)
    return 0 if all_ok else 1


# ---------------------------------------------------------------------------
# parser assembly


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="greenvar",
        description="Equivalence classes of variant semigroups, two ways,"
        " cross-checked.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    green = sub.add_parser("green", help="classify one variant semigroup")
    green.add_argument("--family", choices=FAMILIES, required=True)
    green.add_argument("--n", type=_positive_int, required=True)
    green.add_argument("--a", required=True, help="deformation, element text")
    green.add_argument("--relation", choices=RELATIONS, required=True)
    green.add_argument(
        "--method",
        choices=("brute", "closed", "both"),
        default=None,
        help="default: both (brute for relation j)",
    )
    green.add_argument("--mode", choices=MODES + ("both",), default="corrected")
    green.add_argument("--format", choices=("text", "json", "csv"), default="text")
    green.add_argument("--full", action="store_true", help="never elide member lists")
    green.set_defaults(func=cmd_green)

    verify = sub.add_parser("verify", help="cross-check closed forms against brute force")
    verify.add_argument("--family", choices=FAMILIES, required=True)
    verify.add_argument("--n", type=_positive_int, required=True)
    _add_selection(verify, rank_reps=True)
    verify.add_argument("--format", choices=("text", "json"), default="text")
    verify.set_defaults(func=cmd_verify)

    count = sub.add_parser("count", help="audit class-count formulas")
    count.add_argument("--family", choices=FAMILIES, required=True)
    count.add_argument("--n", type=_positive_int, required=True)
    _add_selection(count, rank_reps=True)
    count.add_argument("--format", choices=("text", "json", "csv"), default="text")
    count.set_defaults(func=cmd_count)

    eggbox_p = sub.add_parser("eggbox", help="export d-class grids")
    eggbox_p.add_argument("--family", choices=FAMILIES, required=True)
    eggbox_p.add_argument("--n", type=_positive_int, required=True)
    eggbox_p.add_argument("--a", required=True, help="deformation, element text")
    eggbox_p.add_argument(
        "--d-rep", default=None, help="only the d-class containing this element"
    )
    eggbox_p.add_argument("--format", choices=("dot", "json"), default="dot")
    eggbox_p.add_argument("--full", action="store_true", help="list every member")
    eggbox_p.set_defaults(func=cmd_eggbox)

    iso = sub.add_parser(
        "iso", help="isomorphism witness between two partial-injection variants"
    )
    iso.add_argument("--n", type=_positive_int, required=True)
    iso.add_argument("--a", required=True)
    iso.add_argument("--b", required=True)
    iso.add_argument("--format", choices=("text", "json"), default="text")
    iso.set_defaults(func=cmd_iso)

    dual = sub.add_parser(
        "dual", help="inversion anti-isomorphism onto the inverse deformation"
    )
    dual.add_argument("--n", type=_positive_int, required=True)
    group = dual.add_mutually_exclusive_group(required=True)
    group.add_argument("--a", help="deformation, element text")
    group.add_argument("--all-a", action="store_true")
    dual.add_argument("--format", choices=("text", "json"), default="text")
    dual.set_defaults(func=cmd_dual)

    return parser


_ELEMENT_OPTIONS = ("--a", "--b", "--d-rep")
_ELEMENT_RE = re.compile(r"^([0-9]+|-)(,([0-9]+|-))*$")


def _glue_element_args(argv: Sequence[str]) -> list[str]:
    # Element texts such as -,-,- start with a dash and would be taken for
    # options; fold them into --opt=value form before argparse sees them.
    out: list[str] = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _ELEMENT_OPTIONS and i + 1 < len(argv) and _ELEMENT_RE.match(argv[i + 1]):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(_glue_element_args(sys.argv[1:] if argv is None else argv))
    try:
        return args.func(parser, args)
    except (ParseError, CapacityError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
