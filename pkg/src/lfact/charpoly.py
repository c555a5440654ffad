"""Characteristic polynomials, the left-modular expansion and its factorization.

``chi(L, t) = sum_x mu(0, x) t^(rho(1) - rho(x))`` for any generalized rank
``rho``.  The expansion over complements ``b`` of a left-modular ``x``
(``b ∧ x = 0``) holds for every rank; the factorized form additionally needs
each ``tau_b: v -> v ∨ b`` to be rank-preserving, which is verified here
rather than assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from lfact.errors import (
    ChainNotModular,
    EmptyFiber,
    HypothesisFailed,
    IdentityFailed,
    LatticeError,
    NoUniqueMax,
    NotGeometric,
    NotLeftModular,
    NotMaximalChain,
    NotModular,
    NotSemimodular,
    RankPreservationFails,
)
from lfact.lattice import FiniteLattice
from lfact.modularity import is_left_modular, is_modular_element, is_semimodular
from lfact.moebius import mobius_table, support
from lfact.poly import ExactPoly
from lfact.rank import GeneralizedRank, ordinary_rank


def _rank(L: FiniteLattice, rank: GeneralizedRank | None) -> GeneralizedRank:
    return ordinary_rank(L) if rank is None else rank


def char_poly(L: FiniteLattice, rank: GeneralizedRank | None = None) -> ExactPoly:
    rho = _rank(L, rank)
    mu = mobius_table(L).row(L.bottom)
    top = rho[L.top]
    return ExactPoly((top - rho[x], mu[x]) for x in range(L.n))


def interval_char_poly(L: FiniteLattice, lo: int, hi: int,
                       rank: GeneralizedRank | None = None) -> ExactPoly:
    """chi([lo, hi]) under the restricted rank, read off the parent's Möbius table."""
    rho = _rank(L, rank)
    row = mobius_table(L).row(lo)
    return ExactPoly((rho[hi] - rho[y], row[y]) for y in L.between(lo, hi))


def complement_terms(L: FiniteLattice, x: int) -> list[int]:
    """Support elements ``b`` with ``b ∧ x = 0``."""
    M = L.meet_table
    return [b for b in support(L) if M[b][x] == L.bottom]


def lm_expansion(L: FiniteLattice, x: int, rank: GeneralizedRank | None = None,
                 check: bool = True) -> ExactPoly:
    """Sum over ``b`` of ``mu(b) t^(rho(1) - rho(b ∨ x)) chi([b, b ∨ x])``.

    Equals ``char_poly(L, rank)`` whenever ``x`` is left-modular.
    """
    if check and not is_left_modular(L, x):
        raise NotLeftModular(f"{L.labels[x]!r} is not left-modular")
    rho = _rank(L, rank)
    mu = mobius_table(L).row(L.bottom)
    out = ExactPoly()
    for b in complement_terms(L, x):
        bx = L.join(b, x)
        inner = interval_char_poly(L, b, bx, rho)
        out = out + (inner * mu[b]).shift(rho[L.top] - rho[bx])
    return out


def lemma_expansion(L: FiniteLattice, x: int, values: Sequence, exponent) -> tuple[ExactPoly, ExactPoly]:
    """Both sides of the expansion for an arbitrary function ``r`` and exponent ``n``.

    Left: ``sum_y mu(y) t^(n - r(y))``.  Right: ``sum_{b ∧ x = 0} mu(b)
    sum_{y in [b, b ∨ x]} mu(b, y) t^(n - r(y))``.  Equal when ``x`` is left-modular.
    """
    r = [Fraction(v) for v in values]
    n = Fraction(exponent)
    tab = mobius_table(L)
    mu = tab.row(L.bottom)
    left = ExactPoly((n - r[y], mu[y]) for y in range(L.n))
    right = ExactPoly()
    M = L.meet_table
    for b in range(L.n):
        if M[b][x] != L.bottom or not mu[b]:
            continue
        row = tab.row(b)
        right = right + ExactPoly((n - r[y], mu[b] * row[y]) for y in L.between(b, L.join(b, x)))
    return left, right


# maps between lattices

@dataclass(frozen=True)
class LatticeMap:
    source: FiniteLattice
    target: FiniteLattice
    image: tuple[int, ...]

    def __call__(self, x: int) -> int:
        return self.image[x]

    def fiber(self, y: int) -> list[int]:
        return [x for x, v in enumerate(self.image) if v == y]

    def is_surjective(self) -> bool:
        return set(self.image) == set(range(self.target.n))


def tau_join(L: FiniteLattice, a: int, b: int) -> LatticeMap:
    """``v -> v ∨ b`` from ``[a ∧ b, a]`` to ``[b, a ∨ b]``."""
    src = L.interval(L.meet(a, b), a)
    tgt = L.interval(b, L.join(a, b))
    image = tuple(tgt.local_index(L.join(v, b)) for v in src.origin)
    return LatticeMap(src, tgt, image)


def sigma_meet(L: FiniteLattice, a: int, b: int) -> LatticeMap:
    """``u -> u ∧ a`` from ``[b, a ∨ b]`` to ``[a ∧ b, a]``."""
    src = L.interval(b, L.join(a, b))
    tgt = L.interval(L.meet(a, b), a)
    image = tuple(tgt.local_index(L.meet(u, a)) for u in src.origin)
    return LatticeMap(src, tgt, image)


def identity_map(L: FiniteLattice) -> LatticeMap:
    return LatticeMap(L, L, tuple(range(L.n)))


def is_join_preserving(f: LatticeMap) -> bool:
    S, T, img = f.source, f.target, f.image
    SJ, TJ = S.join_table, T.join_table
    return all(img[SJ[u][v]] == TJ[img[u]][img[v]] for u in range(S.n) for v in range(u + 1, S.n))


def max_fiber(f: LatticeMap, y: int) -> int:
    """The unique maximum of ``f^-1(y)``."""
    fib = f.fiber(y)
    if not fib:
        raise EmptyFiber(f"nothing maps to {y}")
    top = f.source.join_all(fib)
    if top not in fib:
        raise NoUniqueMax(f"fiber of {y} has no unique maximum")
    return top


def is_rank_preserving(f: LatticeMap, subset: Iterable[int], rank_src: GeneralizedRank,
                       rank_tgt: GeneralizedRank) -> bool:
    """``rho(u, v) = rho'(f u, f v)`` for all ``u <= v`` in ``subset``."""
    S = sorted(set(subset))
    img = f.image
    for u in S:
        for v in S:
            if f.source.leq(u, v) and rank_src.pair(u, v) != rank_tgt.pair(img[u], img[v]):
                return False
    return True


def _transfer_hypotheses(f: LatticeMap) -> None:
    if not is_join_preserving(f):
        raise HypothesisFailed("join-preserving")
    if not f.is_surjective():
        raise HypothesisFailed("surjective")
    if max_fiber(f, f.target.bottom) != f.source.bottom:
        raise HypothesisFailed("max fiber of the bottom is the bottom")


def mobius_transfer_check(f: LatticeMap) -> bool:
    """``mu'(y) = sum of mu over f^-1(y)`` for every ``y``."""
    _transfer_hypotheses(f)
    mu_src = mobius_table(f.source).row(f.source.bottom)
    mu_tgt = mobius_table(f.target).row(f.target.bottom)
    sums = [0] * f.target.n
    for x, y in enumerate(f.image):
        sums[y] += mu_src[x]
    return all(sums[y] == mu_tgt[y] for y in range(f.target.n))


def chi_transfer_check(f: LatticeMap, rank_src: GeneralizedRank, rank_tgt: GeneralizedRank) -> bool:
    """``chi(source) = chi(target)`` for a transfer map that is rank-preserving on H ∪ {1}."""
    _transfer_hypotheses(f)
    keep = set(support(f.source)) | {f.source.top}
    if not is_rank_preserving(f, keep, rank_src, rank_tgt):
        raise HypothesisFailed("rank-preserving on the support and the top")
    return char_poly(f.source, rank_src) == char_poly(f.target, rank_tgt)


# factorization

def tau_rank_failure(L: FiniteLattice, x: int, b: int, rho: GeneralizedRank) -> tuple[int, int] | None:
    """A pair in H(0, x) ∪ {x} on which ``v -> v ∨ b`` changes the pair rank, or None."""
    row = mobius_table(L).row(L.bottom)
    S = [v for v in L.between(L.bottom, x) if row[v]]
    if x not in S:
        S.append(x)
    J = L.join_table
    for u in S:
        for v in S:
            if L.leq(u, v) and rho[v] - rho[u] != rho[J[v][b]] - rho[J[u][b]]:
                return u, v
    return None


def _sum_factor(L, x, rho, bs) -> ExactPoly:
    mu = mobius_table(L).row(L.bottom)
    return ExactPoly((rho[L.top] - rho[x] - rho[b], mu[b]) for b in bs)


def lm_factorization(L: FiniteLattice, x: int, rank: GeneralizedRank | None = None,
                     ) -> tuple[ExactPoly, ExactPoly]:
    """``(chi([0, x]), sum_b mu(b) t^(rho(1) - rho(x) - rho(b)))`` with product ``chi(L)``."""
    if not is_left_modular(L, x):
        raise NotLeftModular(f"{L.labels[x]!r} is not left-modular")
    rho = _rank(L, rank)
    bs = complement_terms(L, x)
    for b in bs:
        bad = tau_rank_failure(L, x, b, rho)
        if bad is not None:
            raise RankPreservationFails(b, bad)
    lower = interval_char_poly(L, L.bottom, x, rho)
    factor = _sum_factor(L, x, rho, bs)
    if lower * factor != char_poly(L, rho):
        raise IdentityFailed(f"factorization at {L.labels[x]!r} does not reproduce chi")
    return lower, factor


def partial_factorization_semimodular(L: FiniteLattice, x: int) -> tuple[ExactPoly, ExactPoly]:
    """Factorization at a modular element of a semimodular lattice (ordinary rank)."""
    if not is_semimodular(L):
        raise NotSemimodular("lattice is not semimodular")
    if not is_modular_element(L, x):
        raise NotModular(f"{L.labels[x]!r} is not modular")
    rho = ordinary_rank(L)
    lower = interval_char_poly(L, L.bottom, x, rho)
    factor = _sum_factor(L, x, rho, complement_terms(L, x))
    if lower * factor != char_poly(L, rho):
        raise IdentityFailed(f"factorization at {L.labels[x]!r} does not reproduce chi")
    return lower, factor


def stanley_partial(L: FiniteLattice, x: int) -> tuple[ExactPoly, ExactPoly]:
    """Stanley's partial factorization in a geometric lattice; sums over every ``b ∧ x = 0``."""
    if not (L.is_atomic() and is_semimodular(L)):
        raise NotGeometric("lattice is not atomic and semimodular")
    if not is_modular_element(L, x):
        raise NotModular(f"{L.labels[x]!r} is not modular")
    rho = ordinary_rank(L)
    bs = [b for b in range(L.n) if L.meet(b, x) == L.bottom]
    lower = interval_char_poly(L, L.bottom, x, rho)
    factor = _sum_factor(L, x, rho, bs)
    if lower * factor != char_poly(L, rho):
        raise IdentityFailed(f"factorization at {L.labels[x]!r} does not reproduce chi")
    return lower, factor


def new_atom_counts(L: FiniteLattice, chain: Sequence[int]) -> list[int]:
    """Number of atoms below ``x_i`` but not below ``x_(i-1)``, for i = 1..n."""
    atoms = L.atoms()
    return [sum(1 for a in atoms if L.leq(a, hi) and not L.leq(a, lo))
            for lo, hi in zip(chain, chain[1:])]


def total_factorization_supersolvable(L: FiniteLattice, chain: Sequence[int]
                                      ) -> tuple[list[int], ExactPoly]:
    """Stanley's total factorization ``chi = prod (t - a_i)`` along a modular maximal chain."""
    if not L.is_maximal_chain(chain):
        raise NotMaximalChain("not a maximal chain")
    if not is_semimodular(L):
        raise NotSemimodular("lattice is not semimodular")
    for c in chain:
        if not is_modular_element(L, c):
            raise ChainNotModular(f"{L.labels[c]!r} is not modular")
    a = new_atom_counts(L, chain)
    poly = ExactPoly.linear_product(a)
    if poly != char_poly(L):
        raise IdentityFailed("total factorization does not reproduce chi")
    return a, poly


def rank_from_values(L: FiniteLattice, values) -> GeneralizedRank:
    try:
        return GeneralizedRank.of(L, values)
    except (ValueError, ZeroDivisionError) as exc:
        raise LatticeError(str(exc)) from None
