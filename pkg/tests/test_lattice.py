import json

import pytest
from hypothesis import given, settings

from lfact import families as F
from lfact.errors import (
    JoinFails,
    LatticeError,
    MeetFails,
    NoUniqueBottom,
    NoUniqueTop,
    NotAcyclic,
    NotComparable,
    TransitiveCoverEdge,
)
from lfact.iso import find_isomorphism, is_isomorphic
from lfact.lattice import FiniteLattice, from_order, product
from lfact.moebius import mobius_bottom, mobius_brute

from conftest import small_lattices


def brute_glb(L, x, y):
    lower = [z for z in range(L.n) if L.leq(z, x) and L.leq(z, y)]
    best = [z for z in lower if all(L.leq(w, z) for w in lower)]
    assert len(best) == 1
    return best[0]


def brute_lub(L, x, y):
    upper = [z for z in range(L.n) if L.leq(x, z) and L.leq(y, z)]
    best = [z for z in upper if all(L.leq(z, w) for w in upper)]
    assert len(best) == 1
    return best[0]


def test_three_chain():
    L = FiniteLattice(["0", "a", "1"], [(0, 1), (1, 2)])
    assert (L.bottom, L.top) == (0, 2)
    assert L.meet(1, 2) == 1 and L.join(0, 1) == 1
    assert L.atoms() == [1]


def test_boolean_meet_is_intersection():
    B = F.boolean_lattice(3)
    assert B.labels[B.meet(B.index("{1,2}"), B.index("{2,3}"))] == "{2}"
    B2 = FiniteLattice(["{}", "{1}", "{2}", "{1,2}"], [(0, 1), (0, 2), (1, 3), (2, 3)])
    assert B2.meet(1, 2) == 0 and B2.join(1, 2) == 3


def test_bowtie_has_two_tops():
    # a, b below both c and d; add a bottom so only the top fails
    with pytest.raises(NoUniqueTop):
        FiniteLattice(["0", "a", "b", "c", "d"], [(0, 1), (0, 2), (1, 3), (1, 4), (2, 3), (2, 4)])


def test_bowtie_with_bounds_is_not_a_lattice():
    labels = ["0", "a", "b", "c", "d", "1"]
    covers = [(0, 1), (0, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 5), (4, 5)]
    with pytest.raises((MeetFails, JoinFails)) as info:
        FiniteLattice(labels, covers)
    assert isinstance(info.value, LatticeError)


def test_construction_errors():
    with pytest.raises(NotAcyclic):
        FiniteLattice(["a", "b"], [(0, 1), (1, 0)])
    with pytest.raises(NoUniqueBottom):
        FiniteLattice(["a", "b", "c"], [(0, 2), (1, 2)])
    with pytest.raises(TransitiveCoverEdge) as info:
        FiniteLattice(["0", "a", "1"], [(0, 1), (1, 2), (0, 2)])
    assert info.value.edge == (0, 2)
    with pytest.raises(LatticeError):
        FiniteLattice(["a", "a"], [(0, 1)])
    with pytest.raises(LatticeError):
        FiniteLattice(["a", "b"], [(0, 5)])


def test_partition_and_noncrossing_joins():
    P = F.partition_lattice(4)
    assert P.labels[P.join(P.index("12"), P.index("23"))] == "123"
    N = F.noncrossing_lattice(4)
    assert N.labels[N.join(N.index("13"), N.index("24"))] == "1234"


def test_complements():
    B = F.boolean_lattice(3)
    assert [B.labels[y] for y in B.complements_in(B.index("{1}"))] == ["{2,3}"]
    P = F.partition_lattice(3)
    assert sorted(P.labels[y] for y in P.complements_in(P.index("12"))) == ["13", "23"]
    N = F.noncrossing_lattice(4)
    comps = {N.labels[y] for y in N.complements_in(N.index("123"))}
    assert {"14", "24", "34"} <= comps and "0" not in comps
    with pytest.raises(NotComparable):
        B.complements_in(B.index("{1}"), B.index("{2}"), B.top)


def test_interval_whole_and_noncrossing_blocks():
    N = F.noncrossing_lattice(5)
    assert is_isomorphic(N.interval(N.bottom, N.top), N)
    w = N.index("12/345")
    expected = product(F.noncrossing_lattice(2), F.noncrossing_lattice(3))
    assert is_isomorphic(N.interval(N.bottom, w), expected)
    w = N.index("145/23")
    assert is_isomorphic(N.interval(N.bottom, w), product(F.noncrossing_lattice(3), F.noncrossing_lattice(2)))


def test_shuffle_lower_interval_is_boolean():
    W = F.shuffle_poset(2, 1)
    I = W.interval(W.index("de"), W.index("∅"))
    assert is_isomorphic(I, F.boolean_lattice(2))
    with pytest.raises(NotComparable):
        W.interval(W.index("d"), W.index("e"))


def test_interval_agrees_with_parent():
    P = F.partition_lattice(4)
    lo, hi = P.index("12"), P.index("1234")
    I = P.interval(lo, hi)
    for i in range(I.n):
        for j in range(I.n):
            assert I.origin[I.meet(i, j)] == P.meet(I.origin[i], I.origin[j])
            assert I.origin[I.join(i, j)] == P.join(I.origin[i], I.origin[j])


def test_duals():
    W = F.shuffle_poset(2, 1)
    assert is_isomorphic(W.dual(), F.shuffle_poset(1, 2))
    assert is_isomorphic(F.chain(5).dual(), F.chain(5))
    D = W.dual().dual()
    assert D.covers == W.covers and D.meet_table == W.meet_table
    assert sorted(W.dual().atoms()) == sorted(W.coatoms())


def test_products():
    assert is_isomorphic(product(F.chain(2), F.chain(2)), F.boolean_lattice(2))
    assert is_isomorphic(product(F.boolean_lattice(1), F.boolean_lattice(2)), F.boolean_lattice(3))
    N2 = product(F.noncrossing_lattice(2), F.noncrossing_lattice(2))
    assert mobius_bottom(N2, N2.top) == 1 == mobius_brute(N2, N2.bottom, N2.top)
    A, B = F.pentagon(), F.tamari(3)
    assert product(A, B).n == A.n * B.n


def test_json_roundtrip_exact():
    for L in (F.shuffle_poset(2, 1), product(F.chain(2), F.pentagon()), F.tamari(4)):
        text = L.to_json()
        M = FiniteLattice.from_json(text)
        assert M.labels == L.labels and M.covers == L.covers
        assert M.to_json() == text
    L = FiniteLattice(["0", "a", "1"], [(0, 1), (1, 2)], rank=["0", "1/2", "3/2"])
    data = json.loads(L.to_json())
    assert data["rank"] == ["0", "1/2", "3/2"]
    assert FiniteLattice.from_json(L.to_json()).rank == L.rank


def test_from_order_builds_hasse_diagram():
    divisors = [1, 2, 3, 4, 6, 12]
    L = from_order(divisors, lambda i, j: divisors[j] % divisors[i] == 0)
    assert len(L.covers) == 7
    assert is_isomorphic(L, F.divisor_lattice(12))


def test_isomorphism_finder_rejects():
    assert find_isomorphism(F.pentagon(), F.diamond()) is None
    iso = find_isomorphism(F.tamari(3), F.pentagon())
    assert iso is not None


@settings(max_examples=40, deadline=None)
@given(small_lattices())
def test_tables_are_bounds(L):
    for x in range(L.n):
        for y in range(L.n):
            assert L.meet(x, y) == brute_glb(L, x, y)
            assert L.join(x, y) == brute_lub(L, x, y)
            assert L.meet(x, L.join(x, y)) == x
            if L.leq(x, y) and L.leq(y, x):
                assert x == y


@settings(max_examples=25, deadline=None)
@given(small_lattices())
def test_associativity_and_modular_inequality(L):
    M, J = L.meet_table, L.join_table
    for x in range(L.n):
        for y in range(L.n):
            for z in range(L.n):
                assert M[M[x][y]][z] == M[x][M[y][z]]
                assert J[J[x][y]][z] == J[x][J[y][z]]
                if L.lt(z, y):
                    assert L.leq(J[z][M[x][y]], M[J[z][x]][y])
