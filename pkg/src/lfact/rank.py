"""Generalized rank functions with exact rational values."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from lfact.errors import LatticeError, NotGraded
from lfact.lattice import FiniteLattice


@dataclass(frozen=True)
class GeneralizedRank:
    """Per-element rank ``rho(x)`` with ``rho(bottom) = 0``.

    The pair rank is ``rho(x, y) = rho(y) - rho(x)``, which is additive along
    any chain by construction.
    """

    values: tuple[Fraction, ...]

    @classmethod
    def of(cls, L: FiniteLattice, values: Iterable) -> GeneralizedRank:
        vals = tuple(Fraction(v) for v in values)
        if len(vals) != L.n:
            raise LatticeError(f"rank has {len(vals)} values for {L.n} elements")
        if vals[L.bottom] != 0:
            raise LatticeError("a generalized rank must vanish at the bottom")
        return cls(vals)

    def __getitem__(self, x: int) -> Fraction:
        return self.values[x]

    def __len__(self):
        return len(self.values)

    def pair(self, x: int, y: int) -> Fraction:
        return self.values[y] - self.values[x]

    def on_interval(self, I: FiniteLattice) -> GeneralizedRank:
        """Restriction to an interval built by ``FiniteLattice.interval``."""
        if I.origin is None:
            raise LatticeError("not an interval of a parent lattice")
        base = self.values[I.origin[I.bottom]]
        return GeneralizedRank(tuple(self.values[p] - base for p in I.origin))


def chain_lengths(L: FiniteLattice) -> tuple[list[int], list[int]]:
    """Shortest and longest chain length from the bottom to each element."""
    lo = [0] * L.n
    hi = [0] * L.n
    seen = [False] * L.n
    seen[L.bottom] = True
    for x in L.topo:
        for c in L.upper_covers[x]:
            if not seen[c]:
                lo[c], hi[c], seen[c] = lo[x] + 1, hi[x] + 1, True
            else:
                lo[c] = min(lo[c], lo[x] + 1)
                hi[c] = max(hi[c], hi[x] + 1)
    return lo, hi


def is_graded(L: FiniteLattice) -> bool:
    lo, hi = chain_lengths(L)
    return lo == hi


def ordinary_rank(L: FiniteLattice) -> GeneralizedRank:
    lo, hi = chain_lengths(L)
    if lo != hi:
        bad = next(x for x in range(L.n) if lo[x] != hi[x])
        raise NotGraded(f"maximal chains to {L.labels[bad]!r} have lengths {lo[bad]} and {hi[bad]}")
    return GeneralizedRank(tuple(Fraction(h) for h in hi))
