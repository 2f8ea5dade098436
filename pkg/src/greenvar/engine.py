"""Variant products and brute-force equivalence classes via principal ideals.

A deformation element a turns a family S on n points into the variant
semigroup (S, *_a) with ``x *_a y = x . a . y`` (left to right).  The five
classic equivalences are computed here from first principles:

- r: equal right ideals  {x} | x *_a S
- l: equal left ideals   {x} | S *_a x
- h: r and l together
- d: smallest equivalence containing r and l (join, via union-find)
- j: equal two-sided ideals  {x} | xS | Sx | SxS

The adjoined identity never enters products; it only contributes the {x}
term to each ideal, which is what the unions above encode.

Everything is exact integer work on small universes.  The full product
table is materialized (numpy) when the universe fits TABLE_LIMIT, and the
ideal families are packed into bit rows so grouping is byte comparison.
"""

from __future__ import annotations

import dataclasses
import functools
import os
from typing import Iterable

import numpy as np

from .elements import (
    CapacityError,
    Element,
    check_family,
    enumerate_family,
    family_of,
    family_size,
    format_element,
)

RELATIONS = ("r", "l", "h", "d", "j")
IDEAL_SIDES = ("right", "left", "two-sided")

BRUTE_CAP = 5  # classification cap for both families; n = 5 is the slow end
TABLE_LIMIT = 4000  # build the |S| x |S| product table when |S| is at most this

BUDGET_ENV = "GREENVAR_MAX_PRODUCTS"
DEFAULT_PRODUCT_BUDGET = 20_000_000


class BudgetError(ValueError):
    """A classification would evaluate more products than the budget allows."""


def product_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    if raw is None:
        return DEFAULT_PRODUCT_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{BUDGET_ENV} must be an integer, got {raw!r}") from None
    if value <= 0:
        raise ValueError(f"{BUDGET_ENV} must be positive, got {value}")
    return value


def variant_product(x: Element, a: Element, y: Element) -> Element:
    """x *_a y = x . a . y, left to right."""
    return x.compose(a).compose(y)  # type: ignore[arg-type]


class VariantSemigroup:
    """A family on n points under the deformed product x *_a y = x.a.y."""

    def __init__(self, family: str, n: int, a: Element):
        check_family(family)
        if family_of(a) != family or a.n != n:
            raise ValueError(
                f"deformation {format_element(a)} is not a {family.upper()}_{n} element"
            )
        self.family = family
        self.n = n
        self.a = a
        self.universe: tuple[Element, ...] = enumerate_family(family, n)
        self.index: dict[Element, int] = {x: i for i, x in enumerate(self.universe)}
        self._table: np.ndarray | None = None
        self._spot_check_associativity()

    @property
    def size(self) -> int:
        return len(self.universe)

    def product(self, x: Element, y: Element) -> Element:
        if x not in self.index or y not in self.index:
            raise ValueError("operands must belong to the universe")
        return variant_product(x, self.a, y)

    def _spot_check_associativity(self) -> None:
        s = self.size
        picks = sorted({0, s - 1, s // 2, s // 3, s // 7})
        for i in picks:
            for j in picks:
                for k in picks:
                    x, y, z = self.universe[i], self.universe[j], self.universe[k]
                    left = self.product(self.product(x, y), z)
                    right = self.product(x, self.product(y, z))
                    assert left == right, "variant product is not associative"

    def table(self) -> np.ndarray:
        """Product table as indices: table[i, j] = index of universe[i] *_a universe[j]."""
        if self._table is not None:
            return self._table
        s = self.size
        if s > TABLE_LIMIT:
            raise CapacityError(
                f"product table for |S| = {s} exceeds the limit {TABLE_LIMIT}"
            )
        n = self.n
        images = np.array([x.images for x in self.universe], dtype=np.int8)
        # Padding slot 0 makes "undefined" propagate through fancy indexing.
        a_pad = np.zeros(n + 1, dtype=np.int8)
        a_pad[1:] = self.a.images
        xa = a_pad[images]  # (s, n): images of x . a
        img_pad = np.zeros((s, n + 1), dtype=np.int8)
        img_pad[:, 1:] = images
        prod = img_pad[:, xa]  # (s, s, n): prod[y, x] = images of x . a . y
        radix = (n + 1) ** np.arange(n - 1, -1, -1, dtype=np.int64)
        lookup = np.full((n + 1) ** n, -1, dtype=np.int32)
        lookup[images.astype(np.int64) @ radix] = np.arange(s, dtype=np.int32)
        table = lookup[prod.astype(np.int64) @ radix].T
        assert table.min() >= 0, "a product left the universe"
        self._table = np.ascontiguousarray(table)
        return self._table


@functools.lru_cache(maxsize=4)
def variant_semigroup(family: str, n: int, a: Element) -> VariantSemigroup:
    """Shared instances so repeated classifications reuse one product table."""
    return VariantSemigroup(family, n, a)


def principal_ideal(v: VariantSemigroup, x: Element, side: str) -> frozenset[Element]:
    """The principal ideal of x with the identity adjoined, as an element set."""
    if side not in IDEAL_SIDES:
        raise ValueError(f"side must be one of {IDEAL_SIDES}, got {side!r}")
    if x not in v.index:
        raise ValueError("element outside the universe")
    if side == "right":
        return frozenset({x}) | {v.product(x, s) for s in v.universe}
    if side == "left":
        return frozenset({x}) | {v.product(s, x) for s in v.universe}
    if v.n > BRUTE_CAP:
        raise CapacityError(f"two-sided ideals are capped at n <= {BRUTE_CAP}")
    table = v.table()
    i = v.index[x]
    right = set(table[i].tolist())
    left = set(table[:, i].tolist())
    both = set(table[sorted(left)].ravel().tolist())
    members = {i} | right | left | both
    return frozenset(v.universe[j] for j in members)


@dataclasses.dataclass(frozen=True)
class GreenClassification:
    """A full partition of a variant semigroup under one of the equivalences.

    Classes are canonically ordered: members ascending, classes by least
    member.  Two classifications describe the same partition exactly when
    their ``classes`` attributes are equal.
    """

    family: str
    n: int
    a: Element
    relation: str
    method: str  # "brute", "closed-corrected" or "closed-literal"
    classes: tuple[tuple[Element, ...], ...]

    def __post_init__(self) -> None:
        total = sum(len(c) for c in self.classes)
        if total != family_size(self.family, self.n):
            raise ValueError("classes do not partition the universe")
        for c in self.classes:
            if not c or list(c) != sorted(c):
                raise ValueError("class members must be sorted and nonempty")
        reps = [c[0] for c in self.classes]
        if reps != sorted(reps):
            raise ValueError("classes must be sorted by least member")

    @functools.cached_property
    def _position(self) -> dict[Element, int]:
        return {x: i for i, c in enumerate(self.classes) for x in c}

    def class_of(self, x: Element) -> tuple[Element, ...]:
        return self.classes[self._position[x]]

    @property
    def representatives(self) -> tuple[Element, ...]:
        return tuple(c[0] for c in self.classes)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.classes)

    @property
    def singleton_count(self) -> int:
        return sum(1 for c in self.classes if len(c) == 1)

    @property
    def multi_classes(self) -> tuple[tuple[Element, ...], ...]:
        return tuple(c for c in self.classes if len(c) > 1)

    def same_partition(self, other: "GreenClassification") -> bool:
        return self.classes == other.classes


def _grouping_to_classes(
    v: VariantSemigroup, groups: Iterable[Iterable[int]]
) -> tuple[tuple[Element, ...], ...]:
    classes = [tuple(v.universe[i] for i in sorted(g)) for g in groups]
    classes.sort(key=lambda c: c[0])
    return tuple(classes)


def _ideal_row_groups(mat: np.ndarray) -> list[list[int]]:
    packed = np.packbits(mat, axis=1)
    groups: dict[bytes, list[int]] = {}
    for i in range(packed.shape[0]):
        groups.setdefault(packed[i].tobytes(), []).append(i)
    return list(groups.values())


def _membership(table: np.ndarray, *, columns: bool, with_self: bool) -> np.ndarray:
    s = table.shape[0]
    rows = np.arange(s)
    mat = np.zeros((s, s), dtype=bool)
    mat[rows[:, None], table.T if columns else table] = True
    if with_self:
        mat[rows, rows] = True
    return mat


def _check_brute_limits(v: VariantSemigroup) -> None:
    if v.n > BRUTE_CAP:
        raise CapacityError(
            f"brute-force classification is capped at n <= {BRUTE_CAP}, got n = {v.n}"
        )
    budget = product_budget()
    needed = v.size * v.size
    if needed > budget:
        raise BudgetError(
            f"classification needs {needed} products, over the budget {budget} "
            f"(override with {BUDGET_ENV})"
        )


def _class_ids(groups: list[list[int]], size: int) -> np.ndarray:
    ids = np.empty(size, dtype=np.int64)
    for gid, members in enumerate(groups):
        ids[members] = gid
    return ids


def green_classes_brute(v: VariantSemigroup, relation: str) -> GreenClassification:
    """Classify the whole universe by ideal comparison (or their join for d)."""
    if relation not in RELATIONS:
        raise ValueError(f"relation must be one of {RELATIONS}, got {relation!r}")
    _check_brute_limits(v)
    table = v.table()
    s = v.size

    if relation == "r":
        groups = _ideal_row_groups(_membership(table, columns=False, with_self=True))
    elif relation == "l":
        groups = _ideal_row_groups(_membership(table, columns=True, with_self=True))
    elif relation == "h":
        r_ids = _class_ids(
            _ideal_row_groups(_membership(table, columns=False, with_self=True)), s
        )
        l_ids = _class_ids(
            _ideal_row_groups(_membership(table, columns=True, with_self=True)), s
        )
        pairs: dict[tuple[int, int], list[int]] = {}
        for i in range(s):
            pairs.setdefault((int(r_ids[i]), int(l_ids[i])), []).append(i)
        groups = list(pairs.values())
    elif relation == "d":
        r_groups = _ideal_row_groups(_membership(table, columns=False, with_self=True))
        l_groups = _ideal_row_groups(_membership(table, columns=True, with_self=True))
        parent = list(range(s))

        def find(i: int) -> int:
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        def union(i: int, j: int) -> None:
            ri, rj = find(i), find(j)
            if ri == rj:
                return
            if ri < rj:  # keep the least member as root
                parent[rj] = ri
            else:
                parent[ri] = rj

        for members in r_groups + l_groups:
            for m in members[1:]:
                union(members[0], m)
        roots: dict[int, list[int]] = {}
        for i in range(s):
            roots.setdefault(find(i), []).append(i)
        groups = list(roots.values())
    else:  # j: two-sided ideals, SxS via one boolean matrix product
        row_raw = _membership(table, columns=False, with_self=False)
        col_raw = _membership(table, columns=True, with_self=False)
        sxs = (col_raw.astype(np.float32) @ row_raw.astype(np.float32)) > 0
        mat = row_raw | col_raw | sxs
        mat[np.arange(s), np.arange(s)] = True
        groups = _ideal_row_groups(mat)

    return GreenClassification(
        family=v.family,
        n=v.n,
        a=v.a,
        relation=relation,
        method="brute",
        classes=_grouping_to_classes(v, groups),
    )


@functools.lru_cache(maxsize=None)
def brute_classification(
    family: str, n: int, a: Element, relation: str
) -> GreenClassification:
    """Cached front door for sweeps that revisit the same deformation."""
    return green_classes_brute(variant_semigroup(family, n, a), relation)


def verify_d_equals_j(
    v: VariantSemigroup,
) -> tuple[bool, tuple[Element, Element] | None]:
    """Check the finite-semigroup identity d = j; a witness pair on failure."""
    d = green_classes_brute(v, "d")
    j = green_classes_brute(v, "j")
    if d.same_partition(j):
        return True, None
    for x in v.universe:
        dc, jc = set(d.class_of(x)), set(j.class_of(x))
        if dc != jc:
            y = min(dc.symmetric_difference(jc))
            return False, (x, y)
    raise AssertionError("partitions differ but no witness found")


@dataclasses.dataclass(frozen=True)
class EggBox:
    """One d-class laid out as a grid: rows are r-classes, columns l-classes,
    and each cell the h-class where they cross (cell = row intersect column)."""

    family: str
    n: int
    a: Element
    d_class: tuple[Element, ...]
    rows: tuple[tuple[Element, ...], ...]
    cols: tuple[tuple[Element, ...], ...]
    cells: tuple[tuple[tuple[Element, ...], ...], ...]

    @property
    def representative(self) -> Element:
        return self.d_class[0]


def egg_box(v: VariantSemigroup, d_class: tuple[Element, ...]) -> EggBox:
    """Grid layout of one d-class from green_classes_brute(v, "d")."""
    members = set(d_class)
    r = brute_classification(v.family, v.n, v.a, "r")
    l = brute_classification(v.family, v.n, v.a, "l")
    rows = tuple(c for c in r.classes if c[0] in members)
    cols = tuple(c for c in l.classes if c[0] in members)
    for c in rows + cols:
        if not members.issuperset(c):
            raise ValueError("d_class is not a union of r- and l-classes")
    cells = tuple(
        tuple(tuple(sorted(set(row) & set(col))) for col in cols) for row in rows
    )
    return EggBox(
        family=v.family, n=v.n, a=v.a, d_class=tuple(d_class),
        rows=rows, cols=cols, cells=cells,
    )


def all_egg_boxes(v: VariantSemigroup) -> tuple[EggBox, ...]:
    d = brute_classification(v.family, v.n, v.a, "d")
    return tuple(egg_box(v, c) for c in d.classes)


@dataclasses.dataclass(frozen=True)
class ClassCountSummary:
    """Multi-class census of one classification, grouped by member rank.

    size_lines rows are (rank, class size, how many classes of that shape);
    the members of any multi r- or l-class share their rank, so the least
    member's rank stands for the class.
    """

    singleton_count: int
    multi_class_count: int
    size_lines: tuple[tuple[int, int, int], ...]


def summarize_classes_by_rank(classification: GreenClassification) -> ClassCountSummary:
    singles = 0
    lines: dict[tuple[int, int], int] = {}
    for c in classification.classes:
        if len(c) == 1:
            singles += 1
        else:
            key = (c[0].rank, len(c))
            lines[key] = lines.get(key, 0) + 1
    return ClassCountSummary(
        singleton_count=singles,
        multi_class_count=sum(lines.values()),
        size_lines=tuple(sorted((k, sz, cnt) for (k, sz), cnt in lines.items())),
    )
