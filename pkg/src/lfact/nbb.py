"""Atom levels, NBB bases and the LL total factorization.

An atom order is a mapping ``atom -> frozenset of atoms strictly below it``.
The level order of a maximal chain puts ``a`` below ``b`` exactly when ``a``
sits in a lower level; any other order is accepted by the NBB enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from lfact.charpoly import char_poly
from lfact.errors import EmptyD, HypothesisFailed, IdentityFailed, NotLL, NotMaximalChain
from lfact.lattice import FiniteLattice, iter_bits
from lfact.modularity import is_left_modular
from lfact.moebius import mobius_table
from lfact.poly import ExactPoly
from lfact.rank import GeneralizedRank

AtomOrder = Mapping[int, frozenset]


@dataclass(frozen=True)
class LevelStructure:
    chain: tuple[int, ...]
    levels: tuple[frozenset, ...]          # levels[i - 1] is A_i
    level_of: dict = field(compare=False)  # atom -> i (1-based)

    @property
    def length(self) -> int:
        return len(self.chain) - 1

    def precedes(self, a: int, b: int) -> bool:
        return self.level_of[a] < self.level_of[b]

    @property
    def atom_order(self) -> dict[int, frozenset]:
        return {b: frozenset(a for a in self.level_of if self.level_of[a] < lb)
                for b, lb in self.level_of.items()}

    def sizes(self) -> list[int]:
        return [len(A) for A in self.levels]


@dataclass(frozen=True)
class NBBSet:
    atoms: frozenset
    join: int


def levels(L: FiniteLattice, chain: Sequence[int]) -> LevelStructure:
    if not L.is_maximal_chain(chain):
        raise NotMaximalChain(f"{list(chain)} is not a maximal chain")
    atoms = L.atoms()
    lv = []
    level_of = {}
    for i, (lo, hi) in enumerate(zip(chain, chain[1:]), start=1):
        A = frozenset(a for a in atoms if L.leq(a, hi) and not L.leq(a, lo))
        lv.append(A)
        for a in A:
            level_of[a] = i
    return LevelStructure(tuple(chain), tuple(lv), level_of)


def antichain_order(L: FiniteLattice) -> dict[int, frozenset]:
    return {a: frozenset() for a in L.atoms()}


def is_bounded_below(L: FiniteLattice, D: Iterable[int], order: AtomOrder) -> bool:
    """Every ``d`` in ``D`` has an atom ``a`` below it in the order with ``a < join(D)``."""
    D = list(D)
    if not D:
        raise EmptyD("bounded-below test needs a nonempty set")
    J = L.join_all(D)
    return all(any(a != J and L.leq(a, J) for a in order.get(d, ())) for d in D)


class _NBBSearch:
    """Depth-first enumeration of NBB sets; NBB is closed under subsets."""

    def __init__(self, L: FiniteLattice, order: AtomOrder, atoms: Sequence[int]):
        self.L = L
        self.atoms = list(atoms)
        pos = {a: i for i, a in enumerate(L.atoms())}
        self.lower = {d: sum(1 << pos[a] for a in order.get(d, ())) for d in self.atoms}
        # strict atoms-below mask of each element, in atom positions
        self.below = [0] * L.n
        for a, i in pos.items():
            for y in iter_bits(L.up[a]):
                if y != a:
                    self.below[y] |= 1 << i

    def bb(self, D: Sequence[int]) -> bool:
        J = self.L.join_all(D)
        mask = self.below[J]
        return all(self.lower[d] & mask for d in D)

    def extends(self, B: Sequence[int], a: int) -> bool:
        """``B ∪ {a}`` stays NBB given that ``B`` is NBB; small subsets first."""
        for k in range(len(B) + 1):
            for D in combinations(B, k):
                if self.bb(D + (a,)):
                    return False
        return True

    def run(self):
        L = self.L
        out: list[tuple[tuple[int, ...], int]] = [((), L.bottom)]
        stack = [((), L.bottom, 0)]
        while stack:
            B, J, start = stack.pop()
            for i in range(start, len(self.atoms)):
                a = self.atoms[i]
                if self.extends(B, a):
                    nb = B + (a,)
                    nj = L.join(J, a)
                    out.append((nb, nj))
                    stack.append((nb, nj, i + 1))
        return out


def nbb_sets(L: FiniteLattice, order: AtomOrder, within: int | None = None) -> list[NBBSet]:
    """All NBB sets, optionally only those made of atoms below ``within``."""
    atoms = L.atoms() if within is None else L.atoms_below(within)
    return [NBBSet(frozenset(B), J) for B, J in _NBBSearch(L, order, atoms).run()]


def nbb_bases(L: FiniteLattice, x: int, order: AtomOrder) -> list[NBBSet]:
    return [S for S in nbb_sets(L, order, within=x) if S.join == x]


def nbb_signed_counts(L: FiniteLattice, order: AtomOrder) -> list[int]:
    """``sum (-1)^|B|`` over NBB bases of each element.

    With an empty order every atom set is NBB, so the bases of all elements are
    summed at once by adding atoms one at a time to a join-indexed tally.
    """
    if not any(order.get(a) for a in L.atoms()):
        tally = [0] * L.n
        tally[L.bottom] = 1
        J = L.join_table
        for a in L.atoms():
            nxt = list(tally)
            for y, c in enumerate(tally):
                if c:
                    nxt[J[y][a]] -= c
            tally = nxt
        return tally
    out = [0] * L.n
    for B, J in _NBBSearch(L, order, L.atoms()).run():
        out[J] += -1 if len(B) % 2 else 1
    return out


def mobius_via_nbb(L: FiniteLattice, x: int, order: AtomOrder) -> int:
    if not any(order.get(a) for a in L.atoms()):
        return nbb_signed_counts(L, order)[x]
    return sum(-1 if len(S.atoms) % 2 else 1 for S in nbb_bases(L, x, order))


# level condition and LL lattices

def level_condition_witness(L: FiniteLattice, chain: Sequence[int]) -> tuple[int, ...] | None:
    """A sequence ``(a, b_1, ..., b_k)`` of strictly rising levels with ``a <= join(b_i)``."""
    ls = levels(L, chain)
    by_level = [sorted(A) for A in ls.levels]
    n = len(by_level)
    for a in L.atoms():
        la = ls.level_of[a]
        seen: set[tuple[int, int]] = set()
        path: list[int] = []

        def rec(J, last):
            if (J, last) in seen:
                return None
            seen.add((J, last))
            for lvl in range(last + 1, n + 1):
                for b in by_level[lvl - 1]:
                    nj = L.join(J, b)
                    path.append(b)
                    if L.leq(a, nj):
                        return (a, *path)
                    got = rec(nj, lvl)
                    if got:
                        return got
                    path.pop()
            return None

        got = rec(L.bottom, la)
        if got:
            return got
    return None


def satisfies_level_condition(L: FiniteLattice, chain: Sequence[int]) -> bool:
    return level_condition_witness(L, chain) is None


def is_ll(L: FiniteLattice, chain: Sequence[int]) -> bool:
    if not L.is_maximal_chain(chain):
        raise NotMaximalChain(f"{list(chain)} is not a maximal chain")
    return all(is_left_modular(L, c) for c in chain) and satisfies_level_condition(L, chain)


def ll_chains(L: FiniteLattice, cap: int | None = None) -> list[list[int]]:
    """Left-modular maximal chains that also pass the level condition."""
    from lfact.modularity import left_modular_chains

    out = []
    for ch in left_modular_chains(L):
        if satisfies_level_condition(L, ch):
            out.append(ch)
            if cap is not None and len(out) >= cap:
                break
    return out


def ll_rank(L: FiniteLattice, x: int, ls: LevelStructure) -> int:
    """Number of levels holding an atom below ``x``."""
    return len({ls.level_of[a] for a in L.atoms_below(x)})


def level_rank(L: FiniteLattice, ls: LevelStructure) -> GeneralizedRank:
    return GeneralizedRank.of(L, [ll_rank(L, x, ls) for x in range(L.n)])


def delta_atomic(L: FiniteLattice, x: int) -> int:
    """Largest atomic element of ``[0, x]``."""
    return L.atomic_part(x)


def levels_match_atomicity(L: FiniteLattice, ls: LevelStructure) -> bool:
    """``A_i`` is empty exactly when ``x_i`` is not atomic."""
    return all((not A) == (delta_atomic(L, x) != x) for A, x in zip(ls.levels, ls.chain[1:]))


def ll_factorization(L: FiniteLattice, chain: Sequence[int]) -> ExactPoly:
    """``prod (t - |A_i|)`` over nonempty levels, checked against chi with the level rank."""
    if not is_ll(L, chain):
        raise NotLL("chain is not left-modular or violates the level condition")
    ls = levels(L, chain)
    poly = ExactPoly.linear_product(len(A) for A in ls.levels if A)
    if poly != char_poly(L, level_rank(L, ls)):
        raise IdentityFailed("level factorization does not reproduce chi")
    return poly


# supporting properties

def property_A_check(L: FiniteLattice, chain: Sequence[int]) -> bool:
    """Two atoms of one level join above an atom of a lower level."""
    if not all(is_left_modular(L, c) for c in chain):
        raise HypothesisFailed("left-modular chain")
    ls = levels(L, chain)
    for i, A in enumerate(ls.levels, start=1):
        for a, b in combinations(sorted(A), 2):
            J = L.join(a, b)
            if not any(L.leq(c, J) for c in L.atoms() if ls.level_of[c] < i):
                return False
    return True


def _require_ll(L, chain):
    if not is_ll(L, chain):
        raise HypothesisFailed("LL lattice")


def property_B_check(L: FiniteLattice, chain: Sequence[int]) -> bool:
    """NBB sets are exactly the sets with at most one atom per level."""
    _require_ll(L, chain)
    ls = levels(L, chain)
    nbb = {S.atoms for S in nbb_sets(L, ls.atom_order)}
    transversals = {frozenset()}
    for A in ls.levels:
        transversals |= {T | {a} for T in transversals for a in A}
    return nbb == transversals


def property_C_check(L: FiniteLattice, chain: Sequence[int]) -> bool:
    """Atoms under an NBB set share levels with it; bases of ``x`` have ``rho(x)`` atoms."""
    _require_ll(L, chain)
    ls = levels(L, chain)
    for S in nbb_sets(L, ls.atom_order):
        used = {ls.level_of[a] for a in S.atoms}
        if any(ls.level_of[a] not in used for a in L.atoms_below(S.join)):
            return False
        if len(S.atoms) != ll_rank(L, S.join, ls):
            return False
    return True


def lemma_cover_witness(L: FiniteLattice) -> tuple[int, int, int] | None:
    """``(w, v, u)`` with w left-modular, v ≺ w and v ∨ u neither equal to nor covered by w ∨ u."""
    from lfact.modularity import left_modular_elements

    J = L.join_table
    for w in left_modular_elements(L):
        for v in L.lower_covers[w]:
            for u in range(L.n):
                p, q = J[v][u], J[w][u]
                if p != q and not L.covered_by(p, q):
                    return w, v, u
    return None


def lemma_cover_check(L: FiniteLattice) -> bool:
    return lemma_cover_witness(L) is None


@dataclass(frozen=True)
class IntervalLL:
    interval: FiniteLattice
    multichain: tuple[int, ...]     # x_i ∨ b for i = 0..n-1, parent indices
    chain: tuple[int, ...]          # distinct elements, interval indices
    levels: LevelStructure          # of the interval along ``chain``
    multichain_sizes: tuple[int, ...]  # |A'_i| for i = 1..n-1


def ll_interval_structure(L: FiniteLattice, chain: Sequence[int], b: int) -> IntervalLL:
    """Push an LL chain up to ``[b, 1]`` for an atom ``b`` of the top level."""
    _require_ll(L, chain)
    ls = levels(L, chain)
    if not ls.levels or not ls.levels[-1]:
        raise HypothesisFailed("top level is nonempty")
    if b not in ls.levels[-1]:
        raise HypothesisFailed("b lies in the top level", L.labels[b])
    multi = tuple(L.join(x, b) for x in chain[:-1])
    I = L.interval(b, L.top)
    distinct = []
    for p in multi:
        if not distinct or distinct[-1] != p:
            distinct.append(p)
    local = tuple(I.local_index(p) for p in distinct)
    if not is_ll(I, local):
        raise IdentityFailed("pushed chain is not LL")
    ils = levels(I, local)
    iatoms = I.atoms()
    sizes = []
    for lo, hi in zip(multi, multi[1:]):
        lo_l, hi_l = I.local_index(lo), I.local_index(hi)
        sizes.append(sum(1 for a in iatoms if I.leq(a, hi_l) and not I.leq(a, lo_l)))
    if sizes != [len(A) for A in ls.levels[:-1]]:
        raise IdentityFailed("level sizes changed on [b, 1]")
    return IntervalLL(I, multi, local, ils, tuple(sizes))
