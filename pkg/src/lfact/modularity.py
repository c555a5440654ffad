"""Modular pairs, left-modular and modular elements.

The element tests scan the defining identity ``z ∨ (x ∧ y) = (z ∨ x) ∧ y``
over every strict pair ``z < y``.  The scans are vectorized with numpy over
the precomputed pair list but perform exactly the definitional comparisons.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass

import numpy as np

from lfact.lattice import FiniteLattice, iter_bits
from lfact.rank import is_graded, ordinary_rank  # noqa: F401  (re-exported)


@dataclass(frozen=True)
class LMReport:
    element: int
    by_definition: bool
    by_cond_ii: bool
    by_cond_iii: bool
    by_cond_iv: bool

    @property
    def agree(self) -> bool:
        return len({self.by_definition, self.by_cond_ii, self.by_cond_iii, self.by_cond_iv}) == 1

    def to_dict(self, L: FiniteLattice | None = None) -> dict:
        out = {"element": self.element, "by_definition": self.by_definition,
               "by_cond_ii": self.by_cond_ii, "by_cond_iii": self.by_cond_iii,
               "by_cond_iv": self.by_cond_iv}
        if L is not None:
            out["label"] = L.labels[self.element]
        return out


def is_modular_pair(L: FiniteLattice, x: int, y: int) -> bool:
    """(x, y) is a modular pair: equality in the modular inequality for every z < y."""
    return modular_pair_witness(L, x, y) is None


def modular_pair_witness(L: FiniteLattice, x: int, y: int) -> int | None:
    """A ``z < y`` where the modular inequality is strict, or None."""
    M, J = L.meet_table, L.join_table
    xy = M[x][y]
    for z in iter_bits(L.down[y]):
        if z != y and J[z][xy] != M[J[z][x]][y]:
            return z
    return None


def left_modular_witness(L: FiniteLattice, x: int) -> tuple[int, int] | None:
    """A pair ``(z, y)`` with ``z < y`` breaking modularity of ``(x, y)``, or None."""
    Z, Y = L.lt_pairs
    if len(Z) == 0:
        return None
    Ma, Ja = L.meet_array, L.join_array
    lhs = Ja[Z, Ma[x, Y]]
    rhs = Ma[Ja[Z, x], Y]
    bad = np.flatnonzero(lhs != rhs)
    if len(bad) == 0:
        return None
    k = bad[0]
    return int(Z[k]), int(Y[k])


def is_left_modular(L: FiniteLattice, x: int) -> bool:
    cached = L._cache.get("left_modular")
    if cached is not None:
        return x in cached
    return left_modular_witness(L, x) is None


def is_modular_element(L: FiniteLattice, x: int) -> bool:
    """Both (x, y) and (y, x) are modular pairs for every y."""
    if not is_left_modular(L, x):
        return False
    below = np.array([z for z in iter_bits(L.down[x]) if z != x], dtype=np.int64)
    if len(below) == 0:
        return True
    Ma, Ja = L.meet_array, L.join_array
    # rows: z < x, columns: y; check z ∨ (y ∧ x) == (z ∨ y) ∧ x
    lhs = Ja[below[:, None], Ma[:, x][None, :]]
    rhs = Ma[Ja[below, :], x]
    return bool(np.array_equal(lhs, rhs))


def _cond_ii(L: FiniteLattice, x: int) -> bool:
    # no z < y with x∧z = x∧y and x∨z = x∨y
    Z, Y = L.lt_pairs
    if len(Z) == 0:
        return True
    mx, jx = L.meet_array[x], L.join_array[x]
    return not bool(np.any((mx[Z] == mx[Y]) & (jx[Z] == jx[Y])))


def _cond_iii(L: FiniteLattice, x: int) -> bool:
    # each cover z ≺ y keeps exactly one of x∧-, x∨- fixed
    lo, hi = L.cover_pairs
    if len(lo) == 0:
        return True
    mx, jx = L.meet_array[x], L.join_array[x]
    return bool(np.all((mx[lo] == mx[hi]) ^ (jx[lo] == jx[hi])))


def _cond_iv(L: FiniteLattice, x: int) -> bool:
    # y is a complement of x in [a, b] (with a <= x <= b) exactly when
    # (a, b) = (x∧y, x∨y), so bucketing by that pair lists the complements of
    # x in every interval containing it; each bucket must be an antichain
    mrow, jrow = L.meet_table[x], L.join_table[x]
    buckets: dict[tuple[int, int], int] = defaultdict(int)
    for y in range(L.n):
        buckets[(mrow[y], jrow[y])] |= 1 << y
    up = L.up
    for mask in buckets.values():
        if mask & (mask - 1) == 0:
            continue
        for y in iter_bits(mask):
            if up[y] & mask != 1 << y:
                return False
    return True


def complements_comparable(L: FiniteLattice, x: int, lo: int, hi: int) -> bool:
    """Whether two complements of ``x`` in ``[lo, hi]`` are comparable (direct scan)."""
    comps = L.complements_in(x, lo, hi)
    return any(L.lt(a, b) or L.lt(b, a) for i, a in enumerate(comps) for b in comps[i + 1:])


def lm_characterizations(L: FiniteLattice, x: int) -> LMReport:
    """Evaluate the four equivalent descriptions of a left-modular element."""
    return LMReport(x, left_modular_witness(L, x) is None, _cond_ii(L, x),
                    _cond_iii(L, x), _cond_iv(L, x))


def left_modular_elements(L: FiniteLattice) -> list[int]:
    got = L._cache.get("left_modular")
    if got is None:
        got = frozenset(x for x in range(L.n) if left_modular_witness(L, x) is None)
        L._cache["left_modular"] = got
    return sorted(got)


def modular_elements(L: FiniteLattice) -> list[int]:
    return [x for x in left_modular_elements(L) if is_modular_element(L, x)]


def semimodularity_witness(L: FiniteLattice) -> tuple[int, int] | None:
    """A pair with rho(x) + rho(y) < rho(x∧y) + rho(x∨y), or None (graded lattices only)."""
    rho = np.array([int(v) for v in ordinary_rank(L).values], dtype=np.int64)
    total = rho[:, None] + rho[None, :]
    bad = np.argwhere(total < rho[L.meet_array] + rho[L.join_array])
    if len(bad) == 0:
        return None
    return int(bad[0][0]), int(bad[0][1])


def is_semimodular(L: FiniteLattice) -> bool:
    return is_graded(L) and semimodularity_witness(L) is None


def left_modular_chains(L: FiniteLattice, cap: int | None = None):
    """Maximal chains of left-modular elements in lexicographic index order."""
    lm = set(left_modular_elements(L))
    if L.bottom not in lm:
        return
    dead: set[int] = set()
    found = 0
    path = [L.bottom]

    def rec(x):
        nonlocal found
        if x == L.top:
            found += 1
            yield list(path)
            return
        produced = False
        for c in sorted(L.upper_covers[x]):
            if c in lm and c not in dead:
                path.append(c)
                for ch in rec(c):
                    produced = True
                    yield ch
                    if cap is not None and found >= cap:
                        return
                path.pop()
        if not produced:
            dead.add(x)

    yield from rec(L.bottom)


def find_left_modular_chain(L: FiniteLattice) -> list[int] | None:
    return next(left_modular_chains(L, cap=1), None)


def meet_left_modular_in_lower_interval(L: FiniteLattice, x: int, y: int) -> bool:
    """x ∧ y is left-modular in [0, y]."""
    I = L.interval(L.bottom, y)
    return is_left_modular(I, I.local_index(L.meet(x, y)))


def join_left_modular_in_upper_interval(L: FiniteLattice, x: int, y: int) -> bool:
    """x ∨ y is left-modular in [y, 1]."""
    I = L.interval(y, L.top)
    return is_left_modular(I, I.local_index(L.join(x, y)))
