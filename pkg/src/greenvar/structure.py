"""Structure maps between deformations of the partial-injection family.

Two facts are made executable here:

- Self-duality: inversion turns (IS_n, *_{a^{-1}}) into the mirror of
  (IS_n, *_a), since (x . a^{-1} . y)^{-1} = y^{-1} . a . x^{-1}.  As a
  consequence inversion carries the r-partition for a onto the l-partition
  for a^{-1}, block by block.
- Rank determines the deformation up to isomorphism: for rank(a) = rank(b)
  there are permutations g, h with g . b . h = a, and then
  phi(x) = h . x . g is an isomorphism (IS_n, *_a) -> (IS_n, *_b).
  Unequal ranks give no isomorphism; that direction is not re-proved here,
  only the constructed witnesses are machine-verified.

All checks are exhaustive over the universe (or all pairs), so they are
capped at the brute-force sizes.
"""

from __future__ import annotations

import dataclasses

from .elements import (
    FAMILY_IS,
    CapacityError,
    PartialPerm,
    UNDEFINED,
    enumerate_family,
    family_of,
    format_element,
)
from .engine import brute_classification, variant_product

STRUCTURE_CAP = 5  # exhaustive pair checks; n = 5 is slow


def _check_is(a: PartialPerm) -> None:
    if family_of(a) != FAMILY_IS:
        raise TypeError("structure maps are defined for partial injections")
    if a.n > STRUCTURE_CAP:
        raise CapacityError(f"exhaustive checks are capped at n <= {STRUCTURE_CAP}")


def rank_representative(n: int, k: int) -> PartialPerm:
    """The canonical deformation of rank k: the identity on {1, ..., k}."""
    if not 0 <= k <= n:
        raise ValueError(f"rank {k} outside 0..{n}")
    return PartialPerm(tuple(range(1, k + 1)) + (UNDEFINED,) * (n - k))


@dataclasses.dataclass(frozen=True)
class DualCheckReport:
    a: PartialPerm
    holds: bool
    counterexample: tuple[PartialPerm, PartialPerm] | None
    classes_match: bool | None  # r-partition for a vs inverted l-partition for a^{-1}


def dual_check(a: PartialPerm, *, check_classes: bool = True) -> DualCheckReport:
    """Verify inverse(x *_{a^{-1}} y) = inverse(y) *_a inverse(x) for all pairs,
    and optionally the induced r-to-l partition correspondence."""
    _check_is(a)
    a_inv = a.inverse()
    universe = enumerate_family(FAMILY_IS, a.n)
    for x in universe:
        for y in universe:
            left = variant_product(x, a_inv, y).inverse()
            right = variant_product(y.inverse(), a, x.inverse())
            if left != right:
                return DualCheckReport(a, False, (x, y), None)
    classes_match = None
    if check_classes:
        r = brute_classification(FAMILY_IS, a.n, a, "r")
        l = brute_classification(FAMILY_IS, a.n, a_inv, "l")
        inverted = {frozenset(x.inverse() for x in c) for c in r.classes}
        classes_match = inverted == {frozenset(c) for c in l.classes}
    return DualCheckReport(a, True, None, classes_match)


@dataclasses.dataclass(frozen=True)
class IsoWitness:
    """Permutations g, h with g . b . h = a; phi(x) = h . x . g maps
    (IS_n, *_a) isomorphically onto (IS_n, *_b)."""

    a: PartialPerm
    b: PartialPerm
    g: PartialPerm
    h: PartialPerm

    def __post_init__(self) -> None:
        if not (self.g.is_permutation() and self.h.is_permutation()):
            raise ValueError("g and h must be permutations")
        if self.g.compose(self.b).compose(self.h) != self.a:
            raise ValueError("g . b . h differs from a")

    def apply(self, x: PartialPerm) -> PartialPerm:
        return self.h.compose(x).compose(self.g)


def _matched_permutation(sources: list[int], targets: list[int], n: int) -> PartialPerm:
    # Send the listed sources to the listed targets and the leftover points to
    # the leftover points, both in ascending order.
    images = [0] * n
    for s, t in zip(sources, targets):
        images[s - 1] = t
    rest_src = sorted(set(range(1, n + 1)) - set(sources))
    rest_tgt = sorted(set(range(1, n + 1)) - set(targets))
    for s, t in zip(rest_src, rest_tgt):
        images[s - 1] = t
    return PartialPerm(tuple(images))


def iso_witness(a: PartialPerm, b: PartialPerm) -> IsoWitness | None:
    """Construct the deterministic witness for rank(a) = rank(b); None when
    the ranks differ (no isomorphism exists in that case)."""
    _check_is(a)
    _check_is(b)
    if a.n != b.n:
        raise ValueError(f"point-set sizes differ: {a.n} vs {b.n}")
    if a.rank != b.rank:
        return None
    n = a.n
    dom_a, dom_b = sorted(a.dom), sorted(b.dom)
    g = _matched_permutation(dom_a, dom_b, n)
    # h must finish the chain i -> g(i) -> b(g(i)) -> a(i) on dom(a).
    h_sources = []
    h_targets = []
    for i in dom_a:
        h_sources.append(b(g(i)))
        h_targets.append(a(i))
    h = _matched_permutation(h_sources, h_targets, n)
    return IsoWitness(a=a, b=b, g=g, h=h)


def verify_isomorphism(
    witness: IsoWitness,
) -> tuple[bool, tuple[PartialPerm, PartialPerm] | None]:
    """Exhaustively confirm phi is a bijective homomorphism; a failing pair
    otherwise (the bijection check reports a pair of colliding elements)."""
    a, b = witness.a, witness.b
    _check_is(a)
    universe = enumerate_family(FAMILY_IS, a.n)
    images: dict[PartialPerm, PartialPerm] = {}
    seen: dict[PartialPerm, PartialPerm] = {}
    for x in universe:
        fx = witness.apply(x)
        if fx in seen:
            return False, (seen[fx], x)
        seen[fx] = x
        images[x] = fx
    for x in universe:
        for y in universe:
            if images[variant_product(x, a, y)] != variant_product(
                images[x], b, images[y]
            ):
                return False, (x, y)
    return True, None


def iso_preserves_classes(
    witness: IsoWitness, relations: tuple[str, ...] = ("r", "l", "h", "d")
) -> bool:
    """phi must carry each equivalence class for a onto one for b."""
    a, b = witness.a, witness.b
    for relation in relations:
        ca = brute_classification(FAMILY_IS, a.n, a, relation)
        cb = brute_classification(FAMILY_IS, b.n, b, relation)
        mapped = {frozenset(witness.apply(x) for x in c) for c in ca.classes}
        if mapped != {frozenset(c) for c in cb.classes}:
            return False
    return True
