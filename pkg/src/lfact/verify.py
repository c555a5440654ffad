"""Verification suites: per-lattice checks and the numbered acceptance criteria.

Every check returns a ``CheckResult``.  A failing result always carries at
least one witness (element labels or a short description of the instance).
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable, Sequence

from lfact import families as F
from lfact.charpoly import (
    char_poly,
    chi_transfer_check,
    complement_terms,
    lm_expansion,
    lm_factorization,
    mobius_transfer_check,
    partial_factorization_semimodular,
    stanley_partial,
    tau_join,
    total_factorization_supersolvable,
)
from lfact.corpus import CorpusItem, corpus, ll_instances
from lfact.errors import HypothesisFailed, IdentityFailed, LatticeError, RankPreservationFails
from lfact.lattice import FiniteLattice
from lfact.modularity import (
    is_left_modular,
    is_modular_element,
    is_semimodular,
    join_left_modular_in_upper_interval,
    left_modular_elements,
    lm_characterizations,
    meet_left_modular_in_lower_interval,
    modular_elements,
    modular_pair_witness,
)
from lfact.moebius import crapo_expansion_check, mobius_bottom, mobius_brute, mobius_table
from lfact.nbb import (
    antichain_order,
    is_ll,
    lemma_cover_witness,
    level_condition_witness,
    level_rank,
    levels,
    ll_factorization,
    ll_interval_structure,
    mobius_via_nbb,
    nbb_signed_counts,
    property_A_check,
    property_B_check,
    property_C_check,
)
from lfact.poly import ExactPoly
from lfact.rank import GeneralizedRank, is_graded, ordinary_rank

PASS, FAIL, HYP = "pass", "fail", "hypothesis-failed"

# Crapo and interval checks run only on lattices up to this size
SMALL = 200

# W_{2,1} with x = de, y = D; the edge list was transcribed by hand
W21_LABELS = {"de", "d", "e", "Dde", "dDe", "deD", "∅", "Dd", "De", "dD", "eD", "D"}
W21_EDGES = {
    ("de", "d"), ("de", "e"), ("de", "Dde"), ("de", "dDe"), ("de", "deD"),
    ("d", "∅"), ("d", "Dd"), ("d", "dD"),
    ("e", "∅"), ("e", "De"), ("e", "eD"),
    ("Dde", "Dd"), ("Dde", "De"),
    ("dDe", "De"), ("dDe", "dD"),
    ("deD", "dD"), ("deD", "eD"),
    ("∅", "D"), ("Dd", "D"), ("De", "D"), ("dD", "D"), ("eD", "D"),
}
W21_EDGE_COUNT = 21


@dataclass
class CheckResult:
    name: str
    status: str
    detail: str = ""
    witnesses: list = field(default_factory=list)
    payload: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_dict(self) -> dict:
        return {"name": self.name, "status": self.status, "detail": self.detail,
                "witnesses": self.witnesses, "payload": self.payload}


def _result(name, failures, detail_ok="", payload=None, limit=5) -> CheckResult:
    if failures:
        return CheckResult(name, FAIL, f"{len(failures)} failure(s)", failures[:limit], payload or {})
    return CheckResult(name, PASS, detail_ok, [], payload or {})


def _labels(L: FiniteLattice, xs) -> list:
    return [L.labels[x] for x in xs]


def default_chain(L: FiniteLattice) -> list[int]:
    return L.first_maximal_chain()


def ranks_for(L: FiniteLattice, chain: Sequence[int]) -> list[tuple[str, GeneralizedRank]]:
    out = []
    if is_graded(L):
        out.append(("ordinary", ordinary_rank(L)))
    out.append(("levels", level_rank(L, levels(L, chain))))
    return out


def factor_rank(L: FiniteLattice, chain: Sequence[int]) -> GeneralizedRank:
    return ordinary_rank(L) if is_graded(L) else level_rank(L, levels(L, chain))


# per-lattice checks

def check_thm3(L: FiniteLattice, name: str = "thm3") -> CheckResult:
    bad = []
    for x in range(L.n):
        rep = lm_characterizations(L, x)
        if not rep.agree:
            bad.append(rep.to_dict(L))
    return _result(name, bad, f"{L.n} elements agree",
                   {"left_modular": _labels(L, left_modular_elements(L))})


def check_lmgr(L: FiniteLattice, chain: Sequence[int] | None = None, name: str = "lmgr") -> CheckResult:
    chain = chain or default_chain(L)
    bad = []
    count = 0
    for rname, rho in ranks_for(L, chain):
        chi = char_poly(L, rho)
        for x in left_modular_elements(L):
            count += 1
            if lm_expansion(L, x, rho, check=False) != chi:
                bad.append({"element": L.labels[x], "rank": rname})
    return _result(name, bad, f"{count} expansions equal chi")


def check_lmfac(L: FiniteLattice, chain: Sequence[int] | None = None, name: str = "lmfac",
                required: Sequence[int] = ()) -> CheckResult:
    """Factor at every left-modular element whose hypotheses hold; ``required`` must qualify."""
    chain = chain or default_chain(L)
    rho = factor_rank(L, chain)
    bad, factored, skipped = [], [], []
    for x in left_modular_elements(L):
        try:
            lm_factorization(L, x, rho)
            factored.append(L.labels[x])
        except RankPreservationFails as exc:
            skipped.append(L.labels[x])
            if x in required:
                bad.append({"element": L.labels[x], "reason": "rank preservation", "b": L.labels[exc.b]})
        except LatticeError as exc:
            bad.append({"element": L.labels[x], "reason": str(exc)})
    if is_semimodular(L):
        geometric = L.is_atomic()
        for x in modular_elements(L):
            try:
                partial_factorization_semimodular(L, x)
                if geometric:
                    stanley_partial(L, x)
            except LatticeError as exc:
                bad.append({"element": L.labels[x], "reason": str(exc)})
    for x in required:
        if not is_left_modular(L, x):
            bad.append({"element": L.labels[x], "reason": "not left-modular"})
    return _result(name, bad, f"{len(factored)} factorizations",
                   {"factored": factored, "rank_not_preserved": skipped})


def check_stanley1(L: FiniteLattice, name: str = "stanley1") -> CheckResult:
    if not (is_semimodular(L) and L.is_atomic()):
        return CheckResult(name, HYP, "lattice is not geometric", ["lattice"])
    bad, payload = [], {}
    for x in modular_elements(L):
        try:
            lower, factor = stanley_partial(L, x)
            payload[L.labels[x]] = [lower.to_json(), factor.to_json()]
        except LatticeError as exc:
            bad.append({"element": L.labels[x], "reason": str(exc)})
    return _result(name, bad, f"{len(payload)} modular elements", {"factors": payload})


def check_stanley2(L: FiniteLattice, chain: Sequence[int], name: str = "stanley2") -> CheckResult:
    try:
        a, poly = total_factorization_supersolvable(L, chain)
    except IdentityFailed as exc:
        return CheckResult(name, FAIL, str(exc), _labels(L, chain))
    except LatticeError as exc:
        return CheckResult(name, HYP, str(exc), _labels(L, chain))
    return CheckResult(name, PASS, "", [], {"a": a, "chi": poly.to_json()})


def check_nbbmu(L: FiniteLattice, chain: Sequence[int] | None = None, name: str = "nbbmu") -> CheckResult:
    chain = chain or default_chain(L)
    mu = mobius_table(L).bottom_vector()
    bad = []
    for oname, order in (("levels", levels(L, chain).atom_order), ("antichain", antichain_order(L))):
        got = nbb_signed_counts(L, order)
        bad += [{"element": L.labels[x], "order": oname, "nbb": got[x], "mu": mu[x]}
                for x in range(L.n) if got[x] != mu[x]]
    return _result(name, bad, f"{L.n} elements, two orders")


def check_ll(L: FiniteLattice, chain: Sequence[int], name: str = "ll") -> CheckResult:
    if not all(is_left_modular(L, c) for c in chain):
        bad = [L.labels[c] for c in chain if not is_left_modular(L, c)]
        return CheckResult(name, FAIL, "chain element not left-modular", bad)
    wit = level_condition_witness(L, chain)
    if wit is not None:
        return CheckResult(name, FAIL, "level condition violated", _labels(L, wit))
    bad = []
    ls = levels(L, chain)
    try:
        poly = ll_factorization(L, chain)
    except LatticeError as exc:
        return CheckResult(name, FAIL, str(exc), _labels(L, chain))
    for label, fn in (("A", property_A_check), ("B", property_B_check), ("C", property_C_check)):
        if not fn(L, chain):
            bad.append(f"property {label}")
    cw = lemma_cover_witness(L)
    if cw is not None:
        bad.append({"cover lemma": _labels(L, cw)})
    top_level = ls.levels[-1] if ls.levels else frozenset()
    for b in sorted(top_level):
        try:
            ll_interval_structure(L, chain, b)
        except LatticeError as exc:
            bad.append({"interval": L.labels[b], "reason": str(exc)})
    return _result(name, bad, "", {"levels": ls.sizes(), "chi": poly.to_json()})


def check_lemmas(L: FiniteLattice, chain: Sequence[int] | None = None, name: str = "lemmas") -> CheckResult:
    """Cover lemma, Crapo's formula, transfer lemmas and interval left-modularity."""
    chain = chain or default_chain(L)
    bad = []
    cw = lemma_cover_witness(L)
    if cw is not None:
        bad.append({"cover lemma": _labels(L, cw)})
    bad += transfer_failures(L, chain)[0]
    if L.n > SMALL:
        return _result(name, bad, f"interval checks skipped above {SMALL} elements")
    bad += [{"crapo": _labels(L, p)} for p in crapo_failures(L)]
    for x in left_modular_elements(L):
        for y in range(L.n):
            if not meet_left_modular_in_lower_interval(L, x, y):
                bad.append({"meet in [0, y]": _labels(L, (x, y))})
            if not join_left_modular_in_upper_interval(L, x, y):
                bad.append({"join in [y, 1]": _labels(L, (x, y))})
    return _result(name, bad)


def crapo_failures(L: FiniteLattice) -> list[tuple[int, int]]:
    return [(y, a) for y in range(L.n) for a in L.down_set(y) if not crapo_expansion_check(L, y, a)]


def transfer_failures(L: FiniteLattice, chain: Sequence[int]) -> tuple[list, int]:
    """Möbius and chi transfer along ``v -> v ∨ b`` for left-modular ``x`` and complements ``b``."""
    bad, tried = [], 0
    rhos = ranks_for(L, chain)
    for x in left_modular_elements(L):
        for b in complement_terms(L, x):
            f = tau_join(L, x, b)
            try:
                ok = mobius_transfer_check(f)
            except HypothesisFailed:
                continue
            tried += 1
            if not ok:
                bad.append({"mobius transfer": _labels(L, (x, b))})
            for rname, rho in rhos:
                try:
                    if not chi_transfer_check(f, rho.on_interval(f.source), rho.on_interval(f.target)):
                        bad.append({"chi transfer": _labels(L, (x, b)), "rank": rname})
                except HypothesisFailed:
                    pass
    return bad, tried


# acceptance criteria

def _items(seed: int, max_size: int | None) -> list[CorpusItem]:
    return list(corpus(seed=seed, max_size=max_size))


def _over_corpus(name, items, fn: Callable[[CorpusItem], CheckResult]) -> CheckResult:
    bad = []
    for it in items:
        r = fn(it)
        if r.status == FAIL:
            bad.append({"lattice": it.name, "detail": r.detail, "witnesses": r.witnesses})
    return _result(name, bad, f"{len(items)} lattices")


def pi_element(L: FiniteLattice, n: int) -> int:
    """``12...(n-1)``, the bottom when n <= 2."""
    return F.standard_partition_chain(L, n)[-2] if n >= 2 else L.bottom


def criterion_1() -> CheckResult:
    name = "1 Kreweras mobius values of NC_n, three ways"
    start = time.perf_counter()
    bad, values = [], {}
    for n in range(1, 9):
        L = F.noncrossing_lattice(n)
        chain = F.standard_partition_chain(L, n)
        expected = F.kreweras_mobius(n)
        by_recursion = mobius_brute(L, L.bottom, L.top)
        by_expansion = lm_expansion(L, pi_element(L, n)).evaluate(0)
        by_nbb = mobius_via_nbb(L, L.top, levels(L, chain).atom_order)
        values[n] = [by_recursion, by_expansion, by_nbb]
        if not by_recursion == by_expansion == by_nbb == expected:
            bad.append({"n": n, "values": values[n], "expected": expected})
    elapsed = time.perf_counter() - start
    if elapsed >= 60:
        bad.append({"runtime_s": round(elapsed, 2)})
    return _result(name, bad, f"{elapsed:.1f}s", {"values": values, "seconds": elapsed})


def criterion_2() -> CheckResult:
    bad = [n for n in range(1, 8)
           if F.nc_charpoly_recurrence(n) != char_poly(F.noncrossing_lattice(n))]
    return _result("2 NC_n characteristic polynomial recurrence", [{"n": n} for n in bad], "n = 1..7")


def criterion_3() -> CheckResult:
    bad = []
    for m in range(0, 7):
        for n in range(0, 7 - m):
            W = F.shuffle_poset(m, n)
            chi = char_poly(W)
            a, b = F.shuffle_charpoly_formula(m, n), F.greene_charpoly(m, n)
            if not a == b == chi:
                bad.append({"m": m, "n": n, "which": "chi"})
            if mobius_bottom(W, W.top) != (-1) ** (m + n) * F.binom(m + n, n):
                bad.append({"m": m, "n": n, "which": "mu"})
    return _result("3 shuffle lattice characteristic polynomials", bad, "m + n <= 6")


def criterion_4() -> CheckResult:
    W = F.shuffle_poset(2, 1)
    edges = {(W.labels[a], W.labels[b]) for a, b in W.covers}
    bad = []
    if set(W.labels) != W21_LABELS or W.n != 12:
        bad.append({"labels": sorted(set(W.labels) ^ W21_LABELS)})
    if edges != W21_EDGES:
        bad.append({"edges differ from fixture": sorted(edges ^ W21_EDGES)})
    if len(edges) != W21_EDGE_COUNT:
        bad.append({"cover_edges": len(edges), "expected": W21_EDGE_COUNT})
    t = ExactPoly.t()
    expected = (t - 1) ** 2 * (t - 3)
    if char_poly(W) != expected:
        bad.append({"chi": str(char_poly(W))})
    return _result("4 W_{2,1} fixture", bad, "", {"edges": len(edges), "chi": str(char_poly(W))})


def criterion_5(seed: int = 0, max_size: int | None = None) -> CheckResult:
    return _over_corpus("5 four left-modularity descriptions agree", _items(seed, max_size),
                        lambda it: check_thm3(it.lattice))


def criterion_6(seed: int = 0, max_size: int | None = None) -> CheckResult:
    return _over_corpus("6 left-modular expansion equals chi", _items(seed, max_size),
                        lambda it: check_lmgr(it.lattice, it.preferred_chain()))


def criterion_7(seed: int = 0, max_size: int | None = None) -> CheckResult:
    def run(it):
        L = it.lattice
        required = []
        if it.name.startswith("pi/") and 2 <= int(it.name[3:]) <= 5:
            required = [pi_element(L, int(it.name[3:]))]
        elif it.name.startswith("shuffle/"):
            required = [L.index(F.EMPTY_WORD)]
        return check_lmfac(L, it.preferred_chain(), required=required)

    return _over_corpus("7 partial factorizations", _items(seed, max_size), run)


def criterion_8() -> CheckResult:
    bad = []
    for n in range(1, 7):
        L = F.partition_lattice(n)
        r = check_stanley2(L, F.standard_partition_chain(L, n))
        if not r.passed or r.payload["a"] != list(range(1, n)):
            bad.append({"n": n, "status": r.status, "a": r.payload.get("a")})
        elif ExactPoly.linear_product(range(1, n)) != char_poly(L):
            bad.append({"n": n, "chi": str(char_poly(L))})
    return _result("8 total factorization of the partition lattice", bad, "n = 1..6")


def criterion_9(seed: int = 0, max_size: int | None = None) -> CheckResult:
    return _over_corpus("9 mobius from NBB bases", _items(seed, max_size),
                        lambda it: check_nbbmu(it.lattice, it.preferred_chain()))


def criterion_10() -> CheckResult:
    bad, passed = [], []
    for it in ll_instances():
        L, chain = it.lattice, it.preferred_chain()
        r = check_ll(L, chain)
        if r.passed:
            passed.append(it.name)
        else:
            bad.append({"lattice": it.name, "detail": r.detail, "witnesses": r.witnesses})
    return _result("10 LL factorization and supporting properties", bad, f"{len(passed)} LL instances",
                   {"ll": passed}, limit=20)


def criterion_11() -> CheckResult:
    bad = []
    N = F.noncrossing_lattice(4)
    rho = ordinary_rank(N)
    p, s = N.index("13"), N.index("24")
    if not rho[p] + rho[s] < rho[N.meet(p, s)] + rho[N.join(p, s)] or is_semimodular(N):
        bad.append("NC_4 semimodularity witness")
    for n in range(4, 9):
        L = F.noncrossing_lattice(n)
        pi = pi_element(L, n)
        sigma = L.index(F.SetPartition.from_blocks(n, [[2, n]]).label)
        phi = L.index(F.SetPartition.from_blocks(n, [[1, n - 1], range(2, n - 1)]).label)
        ok = (is_left_modular(L, pi) and not is_modular_element(L, pi) and L.lt(phi, pi)
              and L.meet(pi, sigma) == L.meet(phi, sigma) == L.bottom
              and L.join(pi, sigma) == L.join(phi, sigma) == L.top
              and modular_pair_witness(L, sigma, pi) is not None)
        if not ok:
            bad.append(f"NC_{n} modularity witness")
    W = F.shuffle_poset(3, 3)
    u, v = W.index("dDEe"), W.index("Fdef")
    r = ordinary_rank(W)
    if not (r[u] + r[v] == 4 and r[W.join(u, v)] == 5 and W.labels[W.join(u, v)] == "DEFe"
            and r[u] + r[v] < r[W.meet(u, v)] + r[W.join(u, v)]):
        bad.append("W_{3,3} semimodularity witness")
    return _result("11 negative witnesses", bad)


def criterion_12(seed: int = 0, max_size: int | None = None) -> CheckResult:
    """Crapo on lattices of at most ``SMALL`` elements; transfer maps on the whole corpus."""
    bad, tried, crapo_count = [], 0, 0
    items = _items(seed, max_size)
    for it in items:
        L = it.lattice
        if L.n <= SMALL:
            crapo_count += 1
            bad += [{"lattice": it.name, "crapo": _labels(L, p)} for p in crapo_failures(L)]
        fails, k = transfer_failures(L, it.preferred_chain())
        tried += k
        bad += [{"lattice": it.name, **f} for f in fails]
    return _result("12 Crapo formula and transfer lemmas", bad,
                   f"Crapo on {crapo_count} lattices, {tried} transfer maps", {"transfer_maps": tried})


CRITERIA: dict[int, Callable[..., CheckResult]] = {
    1: criterion_1, 2: criterion_2, 3: criterion_3, 4: criterion_4, 5: criterion_5,
    6: criterion_6, 7: criterion_7, 8: criterion_8, 9: criterion_9, 10: criterion_10,
    11: criterion_11, 12: criterion_12,
}

CORPUS_CRITERIA = {5, 6, 7, 9, 12}


def run_all(seed: int = 0, max_size: int | None = None) -> list[CheckResult]:
    out = []
    for k, fn in CRITERIA.items():
        if k in CORPUS_CRITERIA:
            out.append(fn(seed=seed, max_size=max_size))
        else:
            out.append(fn())
    return out


__all__ = ["CheckResult", "CRITERIA", "run_all", "check_thm3", "check_lmgr", "check_lmfac",
           "check_stanley1", "check_stanley2", "check_nbbmu", "check_ll", "check_lemmas"]
