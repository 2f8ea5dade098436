"""Closed-form classes and class counts for total maps under x *_a y.

Everything is phrased through two per-element predicates against the
deformation a with range ran(a) and fiber partition ker(a):

- spread(x):  ran(x) meets every ker(a) block at most once
  (so ran(x) is a partial transversal of the fibers of a).
- fed(x):     every fiber of x contains a point of ran(a).

The classes of (T_n, *_a):

- r-class of x: all y with ker(y) = ker(x) and spread(y), when spread(x);
  otherwise {x}.
- l-class: all y with ran(y) = ran(x) and fed(y), when rank(a) > 1 and
  fed(x); otherwise {x}.  rank(a) = 1 leaves every l-class a singleton.
- h-class: ker and ran both fixed when spread(x) and fed(x), else {x}.
- d-class: the r-class when spread(x) but some fiber of x misses ran(a)
  (or rank(a) = 1); the l-class when fed(x) but not spread(x); when both
  predicates hold, all y with spread(y) and fed(y), restricted to
  rank(y) = rank(x) in corrected mode.

Literal mode again follows the known published description word for word.
It deviates twice, and exhaustive computation pins both deviations: the
middle d case is printed with "every fiber of a meets ran(x) more than
once", which together with rank(x) <= rank(a) is unsatisfiable, and the
joint d case lacks the equal-rank restriction.

The class-count formulas audited by count_t_classes: the r side is used
as printed; the published l-side class size is short a factor m! (and an
m = 1 term is counted as multi although those classes are singletons), so
corrected values are carried alongside.
"""

from __future__ import annotations

import dataclasses
import functools
from math import comb, factorial

from .elements import (
    FAMILY_T,
    Partition,
    Transformation,
    enumerate_family,
    family_of,
    family_size,
    format_element,
)
from .closedform_is import MODES, CLOSED_RELATIONS, check_mode
from .engine import (
    ClassCountSummary,
    GreenClassification,
    brute_classification,
    summarize_classes_by_rank,
)


@functools.lru_cache(maxsize=None)
def stirling2(q: int, k: int) -> int:
    """Partitions of a q-set into k nonempty blocks.

    >>> stirling2(4, 2)
    7
    """
    if q < 0 or k < 0:
        raise ValueError("arguments must be nonnegative")
    if q == 0:
        return 1 if k == 0 else 0
    if k == 0 or k > q:
        return 0
    return k * stirling2(q - 1, k) + stirling2(q - 1, k - 1)


def _check_t_pair(x: Transformation, a: Transformation) -> None:
    if family_of(x) != FAMILY_T or family_of(a) != FAMILY_T:
        raise TypeError("expected total transformations")
    if x.n != a.n:
        raise ValueError(f"point-set sizes differ: {x.n} vs {a.n}")


def spread(x: Transformation, a: Transformation) -> bool:
    """ran(x) meets each fiber of a at most once."""
    ran_x = x.ran
    return all(sum(1 for i in block if i in ran_x) <= 1 for block in a.kernel())


def fed(x: Transformation, a: Transformation) -> bool:
    """Every fiber of x contains a point of ran(a)."""
    ran_a = a.ran
    return all(any(i in ran_a for i in block) for block in x.kernel())


def r_class_t(x: Transformation, a: Transformation, mode: str = "corrected") -> frozenset[Transformation]:
    """Same in both modes: kernel fixed, range roams over partial transversals."""
    check_mode(mode)
    _check_t_pair(x, a)
    if not spread(x, a):
        return frozenset({x})
    ker = x.kernel()
    return frozenset(
        y for y in enumerate_family(FAMILY_T, x.n)
        if y.kernel() == ker and spread(y, a)
    )


def l_class_t(x: Transformation, a: Transformation, mode: str = "corrected") -> frozenset[Transformation]:
    """Same in both modes: range fixed, kernel roams over fed partitions."""
    check_mode(mode)
    _check_t_pair(x, a)
    if a.rank <= 1 or not fed(x, a):
        return frozenset({x})
    ran = x.ran
    return frozenset(
        y for y in enumerate_family(FAMILY_T, x.n)
        if y.ran == ran and fed(y, a)
    )


def h_class_t(x: Transformation, a: Transformation, mode: str = "corrected") -> frozenset[Transformation]:
    """Same in both modes: kernel and range both fixed when spread and fed."""
    check_mode(mode)
    _check_t_pair(x, a)
    if not (spread(x, a) and fed(x, a)):
        return frozenset({x})
    ker, ran = x.kernel(), x.ran
    return frozenset(
        y for y in enumerate_family(FAMILY_T, x.n)
        if y.kernel() == ker and y.ran == ran
    )


def _crowded_everywhere(x: Transformation, a: Transformation) -> bool:
    # The literal middle d condition: every fiber of a meets ran(x) more than
    # once.  With rank(x) <= rank(a) alongside it forces 2 rank(a) <= rank(a),
    # so it never holds; kept verbatim for the audit.
    ran_x = x.ran
    return all(sum(1 for i in block if i in ran_x) > 1 for block in a.kernel())


def d_class_t(x: Transformation, a: Transformation, mode: str = "corrected") -> frozenset[Transformation]:
    check_mode(mode)
    _check_t_pair(x, a)
    sp, fd = spread(x, a), fed(x, a)
    if sp and (not fd or a.rank == 1):
        return r_class_t(x, a, mode)
    if mode == "corrected":
        middle = not sp and a.rank > 1 and fd
    else:
        middle = x.rank <= a.rank and _crowded_everywhere(x, a) and fd
    if middle:
        return l_class_t(x, a, mode)
    if sp and fd:
        members = (
            y for y in enumerate_family(FAMILY_T, x.n)
            if spread(y, a) and fed(y, a)
        )
        if mode == "corrected":
            return frozenset(y for y in members if y.rank == x.rank)
        return frozenset(members)
    return frozenset({x})


def _class_key_t(y: Transformation, a: Transformation, relation: str, mode: str):
    sp, fd = spread(y, a), fed(y, a)
    if relation == "r":
        return ("m", y.kernel()) if sp else ("s", y)
    if relation == "l":
        return ("m", y.ran) if (a.rank > 1 and fd) else ("s", y)
    if relation == "h":
        return ("m", y.kernel(), y.ran) if (sp and fd) else ("s", y)
    if sp and (not fd or a.rank == 1):
        return ("r", y.kernel())
    if mode == "corrected":
        if not sp and a.rank > 1 and fd:
            return ("l", y.ran)
    elif y.rank <= a.rank and _crowded_everywhere(y, a) and fd:
        return ("l", y.ran)
    if sp and fd:
        return ("j", y.rank) if mode == "corrected" else ("j",)
    return ("s", y)


def closed_classification_t(
    n: int, a: Transformation, relation: str, mode: str = "corrected"
) -> GreenClassification:
    """The whole universe partitioned by the closed forms in one pass."""
    check_mode(mode)
    if relation not in CLOSED_RELATIONS:
        raise ValueError(f"relation must be one of {CLOSED_RELATIONS}, got {relation!r}")
    if family_of(a) != FAMILY_T or a.n != n:
        raise ValueError(f"deformation {format_element(a)} is not a T_{n} element")
    groups: dict[object, list[Transformation]] = {}
    for y in enumerate_family(FAMILY_T, n):
        groups.setdefault(_class_key_t(y, a, relation, mode), []).append(y)
    classes = sorted(tuple(sorted(g)) for g in groups.values())
    return GreenClassification(
        family=FAMILY_T,
        n=n,
        a=a,
        relation=relation,
        method=f"closed-{mode}",
        classes=tuple(classes),
    )


def _elementary_symmetric(values: tuple[int, ...]) -> list[int]:
    # e[m] for m = 0..len(values), by multiplying out prod (1 + w t).
    coeffs = [1]
    for w in values:
        coeffs = [c + w * prev for c, prev in zip(coeffs + [0], [0] + coeffs)]
    return coeffs


@dataclasses.dataclass(frozen=True)
class TCountReport:
    """Formula-vs-enumeration audit of the class counts for one deformation.

    size_lines rows are (rank m, class size, class count).  The r side is a
    single set of formulas (printed and corrected coincide); the l side
    carries literal and corrected variants.  flags as in ISCountReport.
    """

    n: int
    p: int
    a: Transformation
    fiber_sizes: tuple[int, ...]
    l_all_singleton: bool
    l_singleton_literal: int
    l_singleton_corrected: int
    l_multi_count_literal: int
    l_multi_count_corrected: int
    l_size_lines_literal: tuple[tuple[int, int, int], ...]
    l_size_lines_corrected: tuple[tuple[int, int, int], ...]
    r_singleton: int
    r_multi_count: int
    r_size_lines: tuple[tuple[int, int, int], ...]
    enumerated_r: ClassCountSummary
    enumerated_l: ClassCountSummary
    flags: tuple[str, ...]


def _l_size_literal(n: int, p: int, m: int) -> int:
    return stirling2(p, m) * sum(
        stirling2(n - p, j) * comb(m, j) * factorial(j) for j in range(1, m + 1)
    )


def _l_size_corrected(n: int, p: int, m: int) -> int:
    # Surjections of ran(a) onto the m range values, times free choices for
    # the n - p points outside ran(a).
    return factorial(m) * stirling2(p, m) * m ** (n - p)


def count_t_classes(n: int, a: Transformation) -> TCountReport:
    if family_of(a) != FAMILY_T or a.n != n:
        raise ValueError(f"deformation {format_element(a)} is not a T_{n} element")
    if n < 2:
        raise ValueError("class counts need n >= 2")
    p = a.rank
    size = family_size(FAMILY_T, n)
    fibers = tuple(len(a.preimage(v)) for v in sorted(a.ran))
    enumerated_r = summarize_classes_by_rank(brute_classification(FAMILY_T, n, a, "r"))
    enumerated_l = summarize_classes_by_rank(brute_classification(FAMILY_T, n, a, "l"))

    # l side
    if p == 1:
        l_all = True
        l_single_lit = l_single_cor = size
        l_multi_lit = l_multi_cor = 0
        l_lines_lit: tuple[tuple[int, int, int], ...] = ()
        l_lines_cor: tuple[tuple[int, int, int], ...] = ()
    else:
        l_all = False
        l_lines_lit = tuple(
            (m, _l_size_literal(n, p, m), comb(n, m)) for m in range(1, p + 1)
        )
        l_lines_cor = tuple(
            (m, _l_size_corrected(n, p, m), comb(n, m)) for m in range(2, p + 1)
        )
        l_multi_lit = sum(comb(n, m) for m in range(1, p + 1))
        l_multi_cor = sum(comb(n, m) for m in range(2, p + 1))
        l_single_lit = size - sum(count * sz for _, sz, count in l_lines_lit)
        l_single_cor = size - sum(count * sz for _, sz, count in l_lines_cor)

    # r side, as printed
    e = _elementary_symmetric(fibers)
    r_lines = tuple(
        (m, e[m] * factorial(m), stirling2(n, m)) for m in range(1, p + 1)
    )
    r_multi = sum(stirling2(n, m) for m in range(1, p + 1))
    r_single = size - sum(count * sz for _, sz, count in r_lines)

    flags = []
    if l_single_lit != enumerated_l.singleton_count:
        flags.append("literal:singleton_count:l")
    if l_single_cor != enumerated_l.singleton_count:
        flags.append("corrected:singleton_count:l")
    if l_multi_lit != enumerated_l.multi_class_count:
        flags.append("literal:multi_class_count:l")
    if l_multi_cor != enumerated_l.multi_class_count:
        flags.append("corrected:multi_class_count:l")
    if l_lines_lit != enumerated_l.size_lines:
        flags.append("literal:size_lines:l")
    if l_lines_cor != enumerated_l.size_lines:
        flags.append("corrected:size_lines:l")
    if r_single != enumerated_r.singleton_count:
        flags.append("corrected:singleton_count:r")
    if r_multi != enumerated_r.multi_class_count:
        flags.append("corrected:multi_class_count:r")
    if r_lines != enumerated_r.size_lines:
        flags.append("corrected:size_lines:r")

    return TCountReport(
        n=n,
        p=p,
        a=a,
        fiber_sizes=fibers,
        l_all_singleton=l_all,
        l_singleton_literal=l_single_lit,
        l_singleton_corrected=l_single_cor,
        l_multi_count_literal=l_multi_lit,
        l_multi_count_corrected=l_multi_cor,
        l_size_lines_literal=l_lines_lit,
        l_size_lines_corrected=l_lines_cor,
        r_singleton=r_single,
        r_multi_count=r_multi,
        r_size_lines=r_lines,
        enumerated_r=enumerated_r,
        enumerated_l=enumerated_l,
        flags=tuple(flags),
    )
