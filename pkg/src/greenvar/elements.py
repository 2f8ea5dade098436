"""Finite maps on {1, ..., n}: total transformations and injective partial maps.

Conventions used throughout the package:

- Points are 1-based.  An element is stored as its tuple of images; slot i-1
  holds the image of point i, with 0 marking "undefined" (partial maps only).
- Composition is left to right: ``(x * y)(i) = y(x(i))``.
- The text form is comma-separated images with ``-`` for undefined, so the
  partial map 1 -> 2, 3 -> 1 on three points reads ``"2,-,1"``.
- The canonical order on a family is lexicographic on image tuples with
  undefined sorting before point 1; it is exactly tuple order on ``images``.

Families are named by short tags: ``"is"`` for injective partial maps
(the symmetric inverse monoid) and ``"t"`` for total transformations.
"""

from __future__ import annotations

import dataclasses
import functools
import itertools
from math import comb, factorial
from typing import Iterable, Iterator

UNDEFINED = 0

FAMILY_IS = "is"
FAMILY_T = "t"
FAMILIES = (FAMILY_IS, FAMILY_T)

# Listing caps: beyond these the universe no longer fits comfortable memory
# (|IS_7| = 130922, |T_8| = 16777216).
ENUMERATION_CAP = {FAMILY_IS: 6, FAMILY_T: 7}


class ParseError(ValueError):
    """Malformed element text (bad token, out-of-range point, repeated image, ...)."""


class CapacityError(ValueError):
    """A requested computation exceeds the configured size caps."""


def _check_images(images: tuple[int, ...], *, total: bool) -> None:
    n = len(images)
    if n == 0:
        raise ValueError("an element needs at least one point")
    seen = set()
    for v in images:
        if not isinstance(v, int):
            raise ValueError(f"image {v!r} is not an integer")
        if total and not 1 <= v <= n:
            raise ValueError(f"image {v} outside 1..{n} for a total map")
        if not total:
            if not 0 <= v <= n:
                raise ValueError(f"image {v} outside 0..{n}")
            if v != UNDEFINED:
                if v in seen:
                    raise ValueError(f"image {v} repeated; partial maps here are injective")
                seen.add(v)


def _compose_images(x: tuple[int, ...], y: tuple[int, ...]) -> tuple[int, ...]:
    # Left to right, with 0 propagating: undefined stays undefined and a
    # defined value may fall out of dom(y).
    return tuple(0 if v == UNDEFINED else y[v - 1] for v in x)


@dataclasses.dataclass(frozen=True, order=True)
class PartialPerm:
    """An injective partial map on {1, ..., n}, stored as its image tuple.

    >>> x = PartialPerm((2, 0, 1))
    >>> str(x)
    '2,-,1'
    >>> x.dom, x.ran
    (frozenset({1, 3}), frozenset({1, 2}))
    >>> str(x.inverse())
    '3,1,-'
    >>> str(x * PartialPerm((3, 1, 2)))
    '1,-,3'
    """

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        _check_images(self.images, total=False)

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int | None:
        v = self.images[i - 1]
        return None if v == UNDEFINED else v

    @functools.cached_property
    def dom(self) -> frozenset[int]:
        return frozenset(i for i, v in enumerate(self.images, start=1) if v != UNDEFINED)

    @functools.cached_property
    def ran(self) -> frozenset[int]:
        return frozenset(v for v in self.images if v != UNDEFINED)

    @property
    def rank(self) -> int:
        return len(self.ran)

    def compose(self, other: "PartialPerm") -> "PartialPerm":
        """Left-to-right composite: first self, then other."""
        if not isinstance(other, PartialPerm):
            raise TypeError("can only compose with another PartialPerm")
        if other.n != self.n:
            raise ValueError(f"point-set sizes differ: {self.n} vs {other.n}")
        return PartialPerm(_compose_images(self.images, other.images))

    __mul__ = compose

    def inverse(self) -> "PartialPerm":
        inv = [UNDEFINED] * self.n
        for i, v in enumerate(self.images, start=1):
            if v != UNDEFINED:
                inv[v - 1] = i
        return PartialPerm(tuple(inv))

    def is_permutation(self) -> bool:
        return len(self.dom) == self.n

    def __str__(self) -> str:
        return format_element(self)

    def __repr__(self) -> str:
        return f"PartialPerm({self.images!r})"


@dataclasses.dataclass(frozen=True, order=True)
class Transformation:
    """A total map on {1, ..., n}, stored as its image tuple.

    >>> x = Transformation((2, 3, 1))
    >>> str(x * Transformation((1, 1, 2)))
    '1,2,1'
    >>> Transformation((1, 1, 2)).kernel().blocks
    ((1, 2), (3,))
    """

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        _check_images(self.images, total=True)

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    @functools.cached_property
    def ran(self) -> frozenset[int]:
        return frozenset(self.images)

    @property
    def rank(self) -> int:
        return len(self.ran)

    def compose(self, other: "Transformation") -> "Transformation":
        """Left-to-right composite: first self, then other."""
        if not isinstance(other, Transformation):
            raise TypeError("can only compose with another Transformation")
        if other.n != self.n:
            raise ValueError(f"point-set sizes differ: {self.n} vs {other.n}")
        return Transformation(_compose_images(self.images, other.images))

    __mul__ = compose

    def preimage(self, v: int) -> frozenset[int]:
        return frozenset(i for i, w in enumerate(self.images, start=1) if w == v)

    @functools.cached_property
    def _kernel(self) -> "Partition":
        fibers: dict[int, list[int]] = {}
        for i, v in enumerate(self.images, start=1):
            fibers.setdefault(v, []).append(i)
        return Partition.of_blocks(fibers.values())

    def kernel(self) -> "Partition":
        """The partition of {1..n} into fibers (preimages of range points)."""
        return self._kernel

    def __str__(self) -> str:
        return format_element(self)

    def __repr__(self) -> str:
        return f"Transformation({self.images!r})"


Element = PartialPerm | Transformation


@dataclasses.dataclass(frozen=True, order=True)
class Partition:
    """A partition into disjoint nonempty blocks, held in canonical form.

    Blocks are sorted tuples, ordered by their least point, so equal
    partitions compare and hash equal.
    """

    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        seen: set[int] = set()
        for block in self.blocks:
            if not block:
                raise ValueError("empty block")
            for i in block:
                if i in seen:
                    raise ValueError(f"point {i} appears in two blocks")
                seen.add(i)

    @classmethod
    def of_blocks(cls, blocks: Iterable[Iterable[int]]) -> "Partition":
        canon = tuple(sorted(tuple(sorted(b)) for b in blocks))
        return cls(canon)

    def __len__(self) -> int:
        return len(self.blocks)

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        return iter(self.blocks)

    @functools.cached_property
    def block_of(self) -> dict[int, tuple[int, ...]]:
        return {i: block for block in self.blocks for i in block}


def identity(family: str, n: int) -> Element:
    images = tuple(range(1, n + 1))
    return PartialPerm(images) if family == FAMILY_IS else Transformation(images)


def empty_map(n: int) -> PartialPerm:
    """The nowhere-defined partial map."""
    return PartialPerm((UNDEFINED,) * n)


def constant(n: int, v: int) -> Transformation:
    return Transformation((v,) * n)


def compose(x: Element, y: Element) -> Element:
    """Left-to-right composite of two same-family, same-n elements."""
    return x.compose(y)  # type: ignore[arg-type]


def check_family(family: str) -> None:
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")


def family_size(family: str, n: int) -> int:
    """|T_n| = n^n;  |IS_n| = sum_k C(n,k)^2 k!."""
    check_family(family)
    if n < 1:
        raise ValueError("n must be at least 1")
    if family == FAMILY_T:
        return n**n
    return sum(comb(n, k) ** 2 * factorial(k) for k in range(n + 1))


@functools.lru_cache(maxsize=None)
def enumerate_family(family: str, n: int) -> tuple[Element, ...]:
    """All elements of the family on n points, in canonical order.

    >>> [str(x) for x in enumerate_family("is", 2)]
    ['-,-', '-,1', '-,2', '1,-', '1,2', '2,-', '2,1']
    """
    check_family(family)
    cap = ENUMERATION_CAP[family]
    if not 1 <= n <= cap:
        size = family_size(family, n) if n >= 1 else 0
        raise CapacityError(
            f"listing {family.upper()}_{n} ({size} elements) exceeds the cap n <= {cap}"
        )
    if family == FAMILY_T:
        return tuple(
            Transformation(images)
            for images in itertools.product(range(1, n + 1), repeat=n)
        )
    out = []
    for images in itertools.product(range(n + 1), repeat=n):
        defined = [v for v in images if v != UNDEFINED]
        if len(defined) == len(set(defined)):
            out.append(PartialPerm(images))
    return tuple(out)


def family_of(x: Element) -> str:
    return FAMILY_IS if isinstance(x, PartialPerm) else FAMILY_T


def parse_element(family: str, text: str) -> Element:
    """Parse comma-separated 1-based images; ``-`` marks an undefined point.

    The number of points is the number of entries.

    >>> parse_element("is", "2, -, 1")
    PartialPerm((2, 0, 1))
    >>> parse_element("t", "1,1,2")
    Transformation((1, 1, 2))
    """
    check_family(family)
    tokens = [t.strip() for t in text.split(",")]
    if tokens == [""]:
        raise ParseError("empty element text")
    n = len(tokens)
    images = []
    for pos, tok in enumerate(tokens, start=1):
        if tok == "-":
            if family == FAMILY_T:
                raise ParseError(f"point {pos}: total maps cannot be undefined")
            images.append(UNDEFINED)
            continue
        try:
            v = int(tok)
        except ValueError:
            raise ParseError(f"point {pos}: bad image token {tok!r}") from None
        if not 1 <= v <= n:
            raise ParseError(f"point {pos}: image {v} outside 1..{n}")
        images.append(v)
    if family == FAMILY_T:
        return Transformation(tuple(images))
    defined = [v for v in images if v != UNDEFINED]
    if len(defined) != len(set(defined)):
        raise ParseError("repeated image; partial maps here are injective")
    return PartialPerm(tuple(images))


def format_element(x: Element) -> str:
    return ",".join("-" if v == UNDEFINED else str(v) for v in x.images)
