"""Möbius and zeta functions of a finite lattice."""

from __future__ import annotations

from lfact.errors import NotComparable
from lfact.lattice import FiniteLattice, iter_bits


class MobiusTable:
    """Lazily filled table of ``mu(x, y)`` for ``x <= y``.

    Rows are computed one source at a time by pushing each nonzero value to
    the strict upper set, so a full row costs one pass over the comparable
    pairs above the source.
    """

    def __init__(self, lattice: FiniteLattice):
        self.lattice = lattice
        self._rows: dict[int, dict[int, int]] = {}

    def row(self, x: int) -> dict[int, int]:
        got = self._rows.get(x)
        if got is None:
            got = self._compute_row(x)
            self._rows[x] = got
        return got

    def _compute_row(self, x: int) -> dict[int, int]:
        L = self.lattice
        strict_up = L.strict_up_lists()
        acc: dict[int, int] = {}
        out: dict[int, int] = {}
        for y in L.up_set(x):
            m = 1 if y == x else -acc.get(y, 0)
            out[y] = m
            if m:
                for w in strict_up[y]:
                    acc[w] = acc.get(w, 0) + m
        return out

    def __call__(self, x: int, y: int) -> int:
        if not self.lattice.leq(x, y):
            raise NotComparable(f"mu({x}, {y}) needs {x} <= {y}")
        return self.row(x)[y]

    def bottom_vector(self) -> list[int]:
        r = self.row(self.lattice.bottom)
        return [r[y] for y in range(self.lattice.n)]


def mobius_table(L: FiniteLattice) -> MobiusTable:
    tab = L._cache.get("mobius")
    if tab is None:
        tab = MobiusTable(L)
        L._cache["mobius"] = tab
    return tab


def mobius(L: FiniteLattice, x: int, y: int) -> int:
    return mobius_table(L)(x, y)


def mobius_bottom(L: FiniteLattice, x: int) -> int:
    return mobius_table(L).row(L.bottom)[x]


def zeta(L: FiniteLattice, x: int, y: int) -> int:
    return 1 if L.leq(x, y) else 0


def support(L: FiniteLattice) -> list[int]:
    """Elements ``x`` with ``mu(0, x) != 0``, in index order."""
    r = mobius_table(L).row(L.bottom)
    return [x for x in range(L.n) if r[x]]


def crapo_sum(L: FiniteLattice, y: int, a: int) -> int:
    """Right side of Crapo's complementation formula for ``a`` in ``[0, y]``."""
    if not L.leq(a, y):
        raise NotComparable(f"{a} is not below {y}")
    tab = mobius_table(L)
    comps = L.complements_in(a, L.bottom, y)
    bottom_row = tab.row(L.bottom)
    total = 0
    for c1 in comps:
        m1 = bottom_row[c1]
        if not m1:
            continue
        for c2 in comps:
            if L.leq(c1, c2):
                total += m1 * tab(c2, y)
    return total


def crapo_expansion_check(L: FiniteLattice, y: int, a: int) -> bool:
    return crapo_sum(L, y, a) == mobius_bottom(L, y)


def mobius_brute(L: FiniteLattice, x: int, y: int) -> int:
    """Textbook recursion ``mu(x,y) = -sum_{x<=z<y} mu(x,z)``; independent of ``MobiusTable``."""
    if not L.leq(x, y):
        raise NotComparable(f"{x} is not below {y}")
    memo: dict[int, int] = {}

    def mu(z):
        if z in memo:
            return memo[z]
        if z == x:
            v = 1
        else:
            v = -sum(mu(w) for w in iter_bits(L.up[x] & L.down[z]) if w != z)
        memo[z] = v
        return v

    return mu(y)
