"""Closed-form classes and class counts for partial injections under x *_a y.

For a deformation a of rank p, the equivalence classes of (IS_n, *_a) admit
direct descriptions in terms of domains and ranges:

- r-class of x:  all y with dom(y) = dom(x) and ran(y) inside dom(a),
  provided ran(x) lies inside dom(a); otherwise just {x}.
- l-class: the mirror image (ranges fixed, domains inside ran(a)).
- h-class: both equalities when both side conditions hold.
- d-class: r- or l-class when exactly one side condition holds; when both
  hold, every y with dom(y) inside ran(a) and ran(y) inside dom(a), further
  restricted to rank(y) = rank(x) in corrected mode.

Two evaluation modes exist because the known published description of the
joint d case admits every rank at once; exhaustive computation shows the
equal-rank restriction is required.  "literal" evaluates the description
exactly as stated, "corrected" applies the repair.  r, l and h need no
repair and ignore the mode.

The class-count formulas audited by count_is_classes follow the same split:
the literal singleton count misses the nowhere-defined map's class (always
a singleton), so corrected = literal + 1 whenever p > 1.
"""

from __future__ import annotations

import dataclasses
from math import comb, factorial

from .elements import (
    FAMILY_IS,
    Element,
    PartialPerm,
    enumerate_family,
    family_of,
    family_size,
    format_element,
)
from .engine import (
    ClassCountSummary,
    GreenClassification,
    brute_classification,
    summarize_classes_by_rank,
)

MODES = ("corrected", "literal")
CLOSED_RELATIONS = ("r", "l", "h", "d")


def check_mode(mode: str) -> None:
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")


def falling_factorial(p: int, k: int) -> int:
    """p (p-1) ... (p-k+1); empty product 1 for k = 0.

    >>> falling_factorial(5, 3)
    60
    >>> falling_factorial(2, 0)
    1
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    out = 1
    for i in range(k):
        out *= p - i
    return out


def _check_is_pair(x: PartialPerm, a: PartialPerm) -> None:
    if family_of(x) != FAMILY_IS or family_of(a) != FAMILY_IS:
        raise TypeError("expected partial injections")
    if x.n != a.n:
        raise ValueError(f"point-set sizes differ: {x.n} vs {a.n}")


@dataclasses.dataclass(frozen=True)
class DivisibilityVerdict:
    """Outcome of asking whether x = y *_a u has a solution u.

    When solvable, witness is one solution, built as the composite
    a^{-1} . y^{-1} . x (so its domain sits inside ran(a)).
    """

    solvable: bool
    witness: PartialPerm | None


def right_divisible(x: PartialPerm, y: PartialPerm, a: PartialPerm) -> DivisibilityVerdict:
    """Decide x = y *_a u by the stated criterion:
    dom(x) inside dom(y) and ran(y) inside dom(a).

    The criterion is sufficient (the witness is checked to multiply out to x)
    but its converse has a gap: solvability really needs only the image
    y(dom(x)) inside dom(a), not all of ran(y), so any x whose domain avoids
    the escaping part of y stays reachable (the nowhere-defined x is the
    simplest case).  The stated criterion is kept as the contract; inside an
    r-class both conditions are forced, so the class theorems are unaffected.
    """
    _check_is_pair(x, a)
    _check_is_pair(y, a)
    if not (x.dom <= y.dom and y.ran <= a.dom):
        return DivisibilityVerdict(solvable=False, witness=None)
    u = a.inverse().compose(y.inverse()).compose(x)
    assert y.compose(a).compose(u) == x, "witness failed to multiply out"
    return DivisibilityVerdict(solvable=True, witness=u)


def r_class_is(x: PartialPerm, a: PartialPerm, mode: str = "corrected") -> frozenset[PartialPerm]:
    """Same in both modes: domain fixed, range roams inside dom(a)."""
    check_mode(mode)
    _check_is_pair(x, a)
    if not x.ran <= a.dom:
        return frozenset({x})
    return frozenset(
        y for y in enumerate_family(FAMILY_IS, x.n)
        if y.dom == x.dom and y.ran <= a.dom
    )


def l_class_is(x: PartialPerm, a: PartialPerm, mode: str = "corrected") -> frozenset[PartialPerm]:
    """Same in both modes: range fixed, domain roams inside ran(a)."""
    check_mode(mode)
    _check_is_pair(x, a)
    if not x.dom <= a.ran:
        return frozenset({x})
    return frozenset(
        y for y in enumerate_family(FAMILY_IS, x.n)
        if y.ran == x.ran and y.dom <= a.ran
    )


def h_class_is(x: PartialPerm, a: PartialPerm, mode: str = "corrected") -> frozenset[PartialPerm]:
    """Same in both modes: all bijections dom(x) -> ran(x) when both side
    conditions hold, else {x}."""
    check_mode(mode)
    _check_is_pair(x, a)
    if not (x.ran <= a.dom and x.dom <= a.ran):
        return frozenset({x})
    return frozenset(
        y for y in enumerate_family(FAMILY_IS, x.n)
        if y.dom == x.dom and y.ran == x.ran
    )


def d_class_is(x: PartialPerm, a: PartialPerm, mode: str = "corrected") -> frozenset[PartialPerm]:
    check_mode(mode)
    _check_is_pair(x, a)
    r_ok = x.ran <= a.dom
    l_ok = x.dom <= a.ran
    if r_ok and l_ok:
        members = (
            y for y in enumerate_family(FAMILY_IS, x.n)
            if y.dom <= a.ran and y.ran <= a.dom
        )
        if mode == "corrected":
            return frozenset(y for y in members if y.rank == x.rank)
        return frozenset(members)
    if r_ok:
        return r_class_is(x, a, mode)
    if l_ok:
        return l_class_is(x, a, mode)
    return frozenset({x})


def _class_key_is(y: PartialPerm, a: PartialPerm, relation: str, mode: str):
    r_ok = y.ran <= a.dom
    l_ok = y.dom <= a.ran
    if relation == "r":
        return ("m", y.dom) if r_ok else ("s", y)
    if relation == "l":
        return ("m", y.ran) if l_ok else ("s", y)
    if relation == "h":
        return ("m", y.dom, y.ran) if (r_ok and l_ok) else ("s", y)
    if r_ok and l_ok:
        return ("j", y.rank) if mode == "corrected" else ("j",)
    if r_ok:
        return ("r", y.dom)
    if l_ok:
        return ("l", y.ran)
    return ("s", y)


def closed_classification_is(
    n: int, a: PartialPerm, relation: str, mode: str = "corrected"
) -> GreenClassification:
    """The whole universe partitioned by the closed forms in one pass."""
    check_mode(mode)
    if relation not in CLOSED_RELATIONS:
        raise ValueError(f"relation must be one of {CLOSED_RELATIONS}, got {relation!r}")
    if family_of(a) != FAMILY_IS or a.n != n:
        raise ValueError(f"deformation {format_element(a)} is not an IS_{n} element")
    groups: dict[object, list[PartialPerm]] = {}
    for y in enumerate_family(FAMILY_IS, n):
        groups.setdefault(_class_key_is(y, a, relation, mode), []).append(y)
    classes = sorted(tuple(sorted(g)) for g in groups.values())
    return GreenClassification(
        family=FAMILY_IS,
        n=n,
        a=a,
        relation=relation,
        method=f"closed-{mode}",
        classes=tuple(classes),
    )


@dataclasses.dataclass(frozen=True)
class ISCountReport:
    """Formula-vs-enumeration audit of the class counts for one deformation.

    Counts cover the r side; by the dom/ran mirror symmetry the l side has
    the same census, and both enumerations are carried for the audit.
    size_lines rows are (rank k, class size [p]_k, class count C(n,k)).
    flags name quantities where a formula disagrees with enumeration,
    prefixed "literal:" (expected findings) or "corrected:" (bugs).
    """

    n: int
    p: int
    a: PartialPerm
    all_singleton: bool
    singleton_literal: int
    singleton_corrected: int
    multi_class_count: int
    size_lines: tuple[tuple[int, int, int], ...]
    enumerated_r: ClassCountSummary
    enumerated_l: ClassCountSummary
    flags: tuple[str, ...]


def _literal_singleton_count_is(n: int, p: int) -> int:
    # Double sum over rank k and the number m >= 1 of range points outside
    # dom(a): such elements keep a one-element r-class.
    total = 0
    for k in range(n + 1):
        for m in range(1, k + 1):
            total += comb(n - p, m) * comb(p, k - m) * comb(n, k) * factorial(k)
    return total


def count_is_classes(n: int, a: PartialPerm) -> ISCountReport:
    if family_of(a) != FAMILY_IS or a.n != n:
        raise ValueError(f"deformation {format_element(a)} is not an IS_{n} element")
    p = a.rank
    size = family_size(FAMILY_IS, n)
    enumerated_r = summarize_classes_by_rank(brute_classification(FAMILY_IS, n, a, "r"))
    enumerated_l = summarize_classes_by_rank(brute_classification(FAMILY_IS, n, a, "l"))

    if p <= 1:
        all_singleton = True
        singleton_literal = singleton_corrected = size
        multi = 0
        size_lines: tuple[tuple[int, int, int], ...] = ()
    else:
        all_singleton = False
        singleton_literal = _literal_singleton_count_is(n, p)
        singleton_corrected = singleton_literal + 1  # the nowhere-defined map's class
        multi = sum(comb(n, k) for k in range(1, p + 1))
        size_lines = tuple(
            (k, falling_factorial(p, k), comb(n, k)) for k in range(1, p + 1)
        )
        covered = sum(count * sz for _, sz, count in size_lines)
        assert singleton_corrected + covered == size, "census identity failed"

    flags = []
    for side, enum in (("r", enumerated_r), ("l", enumerated_l)):
        if singleton_literal != enum.singleton_count:
            flags.append(f"literal:singleton_count:{side}")
        if singleton_corrected != enum.singleton_count:
            flags.append(f"corrected:singleton_count:{side}")
        if multi != enum.multi_class_count:
            flags.append(f"corrected:multi_class_count:{side}")
        if size_lines != enum.size_lines:
            flags.append(f"corrected:size_lines:{side}")

    return ISCountReport(
        n=n,
        p=p,
        a=a,
        all_singleton=all_singleton,
        singleton_literal=singleton_literal,
        singleton_corrected=singleton_corrected,
        multi_class_count=multi,
        size_lines=size_lines,
        enumerated_r=enumerated_r,
        enumerated_l=enumerated_l,
        flags=tuple(flags),
    )
