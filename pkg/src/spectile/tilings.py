"""Tilings of the integers by finite sets with periodic complements.

A finite set A of integers tiles Z by a periodic complement R + mZ exactly
when A is distinct mod m and the residues (a + r) mod m cover Z_m once each.
Everything here reduces to that cyclic check, so all verdicts are exact.
Complement searches are backtracking exact cover over Z_m with coverage
tables kept as integer bitmasks; a search that finds nothing within its
period bound is inconclusive, never a refutation.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .spectra import IntSet

# deadline polls happen once per this many search nodes
_POLL_INTERVAL = 1024


class SearchTimeout(RuntimeError):
    """Raised when a complement search passes its cooperative deadline."""


@dataclass(frozen=True, order=True)
class PeriodicSet:
    """The set R + mZ, stored as sorted residues R inside [0, m)."""

    residues: tuple[int, ...]
    period: int

    def __post_init__(self):
        if self.period < 1:
            raise ValueError("period must be positive")
        for r in self.residues:
            if not 0 <= r < self.period:
                raise ValueError(f"residue {r} outside [0, {self.period})")
        for a, b in zip(self.residues, self.residues[1:]):
            if not a < b:
                raise ValueError("residues must be strictly increasing")

    @classmethod
    def of(cls, residues: Iterable[int], period: int) -> "PeriodicSet":
        if period < 1:
            raise ValueError("period must be positive")
        return cls(tuple(sorted(set(int(r) % period for r in residues))), period)

    def __contains__(self, n: int) -> bool:
        return n % self.period in self.residues

    def __len__(self) -> int:
        return len(self.residues)


@dataclass(frozen=True)
class TilingCertificate:
    """A verified tiling of Z: tile + (complement.residues + period*Z) = Z.

    checked_window records the residue range [lo, hi) that was covered
    exactly once; periodicity extends the check to all of Z.
    """

    tile: IntSet
    complement: PeriodicSet
    checked_window: tuple[int, int]


def _as_elements(tile) -> tuple[int, ...]:
    if isinstance(tile, IntSet):
        return tile.elements
    return IntSet.of(tile).elements


def tiles_cyclic(tile, residues: Iterable[int], m: int) -> bool:
    """Exact test of A + (R + mZ) = Z with every integer covered once:
    A distinct mod m, |A|*|R| = m, and the sums (a + r) mod m pairwise
    distinct."""
    if m < 1:
        raise ValueError("modulus must be positive")
    a = _as_elements(tile)
    r = sorted(set(x % m for x in residues))
    a_mod = set(x % m for x in a)
    if len(a_mod) != len(a):
        return False
    if len(a) * len(r) != m:
        return False
    covered = set()
    for t in r:
        for x in a_mod:
            y = (x + t) % m
            if y in covered:
                return False
            covered.add(y)
    return len(covered) == m


def is_tiling_of_Z(tile, complement: PeriodicSet) -> bool:
    """Does tile + complement partition Z?  Reduces to the cyclic check."""
    return tiles_cyclic(tile, complement.residues, complement.period)


def certify_tiling(tile, complement: PeriodicSet) -> TilingCertificate:
    """Verify and package a tiling of Z; raises ValueError if it fails."""
    tile = tile if isinstance(tile, IntSet) else IntSet.of(tile)
    if not is_tiling_of_Z(tile, complement):
        raise ValueError(
            f"{tuple(tile)} does not tile Z by residues {complement.residues} "
            f"mod {complement.period}")
    return TilingCertificate(tile, complement, (0, complement.period))


def _rotated_masks(elements: Sequence[int], m: int) -> list[int]:
    """masks[t] marks the residues of (elements + t) mod m."""
    full = (1 << m) - 1
    base = 0
    for x in elements:
        base |= 1 << (x % m)
    return [((base << t) | (base >> (m - t))) & full if t else base
            for t in range(m)]


def find_complements(tile, m: int) -> list[tuple[int, ...]]:
    """All residue sets R with 0 in R and tiles_cyclic(tile, R, m), sorted
    lexicographically.

    Exact cover by backtracking: place the translate 0 first, then
    repeatedly take the smallest uncovered residue u and branch on the
    translates u - a mod m, a in tile.  Each valid R is reached by exactly
    one branch sequence, so no deduplication is needed.
    """
    if m < 1:
        raise ValueError("modulus must be positive")
    a = _as_elements(tile)
    if not a or m % len(a) != 0:
        return []
    if len(set(x % m for x in a)) != len(a):
        return []
    a_mod = sorted(x % m for x in a)
    masks = _rotated_masks(a_mod, m)
    full = (1 << m) - 1
    results: list[tuple[int, ...]] = []
    chosen = [0]

    def extend(covered: int) -> None:
        if covered == full:
            results.append(tuple(sorted(chosen)))
            return
        gap = ~covered & full
        u = (gap & -gap).bit_length() - 1
        for t in sorted((u - x) % m for x in a_mod):
            mask = masks[t]
            if mask & covered:
                continue
            chosen.append(t)
            extend(covered | mask)
            chosen.pop()

    extend(masks[0])
    results.sort()
    return results


def find_common_complement(family, m_max: int, *,
                           deadline: Optional[float] = None,
                           ) -> Optional[PeriodicSet]:
    """Smallest-period complement shared by every member of the family.

    Tries periods m = p, 2p, ..., m_max (p the common cardinality; other
    periods cannot satisfy |A|*|R| = m).  Within one period the search is a
    joint exact cover holding one coverage table per member: take the
    smallest residue uncovered in the first table, branch on translates
    u - a mod m with a from the first member in ascending order, and accept
    a translate only if it collides with no table.  Returns the first hit,
    which therefore has minimal period; None when the bound is exhausted.

    deadline is an absolute time.monotonic() value; passing it raises
    SearchTimeout so the caller can report an honest partial result.
    """
    sets = [s if isinstance(s, IntSet) else IntSet.of(s) for s in family]
    if not sets:
        raise ValueError("family must be nonempty")
    p = len(sets[0])
    if p < 1:
        raise ValueError("family members must be nonempty")
    if any(len(s) != p for s in sets):
        raise ValueError("family members must share one cardinality")
    for m in range(p, m_max + 1, p):
        found = _common_complement_mod(sets, m, deadline)
        if found is not None:
            return PeriodicSet(found, m)
    return None


def _common_complement_mod(sets: list[IntSet], m: int,
                           deadline: Optional[float],
                           ) -> Optional[tuple[int, ...]]:
    reduced = []
    for s in sets:
        a_mod = sorted(x % m for x in s)
        if len(set(a_mod)) != len(a_mod):
            return None
        reduced.append(a_mod)
    masks = [_rotated_masks(a_mod, m) for a_mod in reduced]
    full = (1 << m) - 1
    first = reduced[0]
    nodes = 0

    def extend(covered: list[int], chosen: list[int],
               ) -> Optional[tuple[int, ...]]:
        nonlocal nodes
        nodes += 1
        if nodes % _POLL_INTERVAL == 0 and deadline is not None:
            if time.monotonic() > deadline:
                raise SearchTimeout(
                    f"common-complement search passed its deadline at period {m}")
        if covered[0] == full:
            return tuple(sorted(chosen))
        gap = ~covered[0] & full
        u = (gap & -gap).bit_length() - 1
        for t in sorted((u - x) % m for x in first):
            if any(table[t] & cov for table, cov in zip(masks, covered)):
                continue
            hit = extend([cov | table[t] for table, cov in zip(masks, covered)],
                         chosen + [t])
            if hit is not None:
                return hit
        return None

    if deadline is not None and time.monotonic() > deadline:
        raise SearchTimeout(
            f"common-complement search passed its deadline at period {m}")
    return extend([table[0] for table in masks], [0])
