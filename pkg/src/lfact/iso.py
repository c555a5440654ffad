"""Backtracking isomorphism test for small lattices."""

from __future__ import annotations

from lfact.errors import TooLarge
from lfact.lattice import FiniteLattice
from lfact.rank import chain_lengths

ISO_LIMIT = 200


def _signature(L: FiniteLattice) -> list[tuple]:
    lo, hi = chain_lengths(L)
    return [(lo[x], hi[x], len(L.upper_covers[x]), len(L.lower_covers[x]),
             L.up[x].bit_count(), L.down[x].bit_count()) for x in range(L.n)]


def find_isomorphism(A: FiniteLattice, B: FiniteLattice) -> list[int] | None:
    """An order isomorphism ``A -> B`` as an index list, or None."""
    if max(A.n, B.n) > ISO_LIMIT:
        raise TooLarge(f"isomorphism search limited to {ISO_LIMIT} elements")
    if A.n != B.n or len(A.covers) != len(B.covers):
        return None
    sa, sb = _signature(A), _signature(B)
    if sorted(sa) != sorted(sb):
        return None
    order = list(A.topo)
    image = [-1] * A.n
    used = [False] * B.n
    cands = {x: [y for y in range(B.n) if sb[y] == sa[x]] for x in order}

    def ok(x, y):
        for p in A.lower_covers[x]:
            if image[p] not in B.lower_covers[y]:
                return False
        return True

    def rec(k):
        if k == len(order):
            return True
        x = order[k]
        for y in cands[x]:
            if not used[y] and ok(x, y):
                image[x], used[y] = y, True
                if rec(k + 1):
                    return True
                image[x], used[y] = -1, False
        return False

    return list(image) if rec(0) else None


def is_isomorphic(A: FiniteLattice, B: FiniteLattice) -> bool:
    return find_isomorphism(A, B) is not None
