import pytest

from lfact import families as F
from lfact.charpoly import char_poly
from lfact.errors import LatticeError, TooLarge
from lfact.modularity import is_left_modular, is_modular_element
from lfact.moebius import mobius_bottom
from lfact.poly import ExactPoly
from lfact.rank import ordinary_rank

t = ExactPoly.t()


def test_sizes():
    P = F.partition_lattice(4)
    assert P.n == 15 == F.bell(4)
    assert ordinary_rank(P)[P.top] == 3
    D = F.divisor_lattice(12)
    assert D.n == 6 and mobius_bottom(D, D.top) == 0
    assert F.tamari(3).n == 5
    for n in range(1, 7):
        assert F.tamari(n).n == F.catalan(n)
    for n in range(1, 9):
        assert F.noncrossing_lattice(n).n == F.catalan(n)
    for m in range(4):
        for n in range(4):
            assert F.shuffle_poset(m, n).n == F.shuffle_count(m, n)


def test_catalan_and_binomials():
    assert F.catalan(0) == 1
    assert F.catalan(3) == 5 and F.catalan(4) == 14
    assert all(F.catalan(n) == F.catalan_recurrence(n) for n in range(15))
    assert F.binom(4, 2) == 6 and F.binom(3, 5) == 0


def test_crossing():
    assert not F.is_noncrossing(F.SetPartition.parse("13/24", 4))
    assert F.is_noncrossing(F.SetPartition.parse("13", 4))
    assert F.SetPartition.parse("13", 4).blocks == ((1, 3), (2,), (4,))


def test_noncrossing_is_meet_sublattice():
    N, P = F.noncrossing_lattice(5), F.partition_lattice(5)
    for x in range(N.n):
        for y in range(N.n):
            px, py = P.index(N.labels[x]), P.index(N.labels[y])
            assert N.labels[N.meet(x, y)] == P.labels[P.meet(px, py)]
            assert P.leq(P.join(px, py), P.index(N.labels[N.join(x, y)]))
    p, s = F.SetPartition.parse("13", 4), F.SetPartition.parse("24", 4)
    assert p.join(s).label == "13/24"


def test_pi_left_modular_not_modular():
    for n in range(2, 9):
        N = F.noncrossing_lattice(n)
        pi = F.standard_partition_chain(N, n)[-2]
        assert is_left_modular(N, pi)
        assert is_modular_element(N, pi) == (n < 4)


def test_shuffle_fixture_elements():
    W = F.shuffle_poset(2, 1)
    assert sorted(W.labels) == sorted(["de", "d", "e", "Dde", "dDe", "deD", "∅", "Dd", "De",
                                       "dD", "eD", "D"])
    assert W.labels[W.bottom] == "de" and W.labels[W.top] == "D"
    assert F.ShuffleWord.parse("dDe", 2, 1).rank() == 1


def test_crossed_letters_and_join():
    u, v = F.ShuffleWord("dDEe", 3, 3), F.ShuffleWord("Fdef", 3, 3)
    assert F.crossed_letters(u, v) == {"d"}
    assert F.shuffle_join(u, v).word == "DEFe"
    assert F.order_leq(F.ShuffleWord("de", 2, 1), F.ShuffleWord("Dd", 2, 1))
    assert F.cover(F.ShuffleWord("d", 2, 1), F.ShuffleWord("Dd", 2, 1))
    assert not F.cover(F.ShuffleWord("de", 2, 1), F.ShuffleWord("Dd", 2, 1))
    with pytest.raises(LatticeError):
        F.ShuffleWord("ed", 2, 1)


def test_word_operations_match_tables():
    for m, n in ((2, 1), (2, 2), (3, 2), (1, 3)):
        W = F.shuffle_poset(m, n)
        words = [F.word_of(W, x, m, n) for x in range(W.n)]
        for x in range(W.n):
            for y in range(W.n):
                assert F.shuffle_join(words[x], words[y]).label == W.labels[W.join(x, y)]
                assert F.shuffle_meet(words[x], words[y]).label == W.labels[W.meet(x, y)]
                assert F.order_leq(words[x], words[y]) == W.leq(x, y)


def test_x_subwords_are_modular():
    W = F.shuffle_poset(2, 2)
    for x in range(W.n):
        lab = W.labels[x]
        if lab == "∅" or lab.islower():
            assert is_modular_element(W, x)


def test_y_subwords_are_left_modular():
    W = F.shuffle_poset(2, 2)
    for x in range(W.n):
        if W.labels[x].isupper():
            assert is_left_modular(W, x)


def test_y_subwords_are_modular():
    W = F.shuffle_poset(2, 2)
    for x in range(W.n):
        if W.labels[x].isupper():
            assert is_modular_element(W, x), W.labels[x]


def test_shuffle_semimodularity_counterexample():
    W = F.shuffle_poset(3, 3)
    u, v = W.index("dDEe"), W.index("Fdef")
    rho = ordinary_rank(W)
    assert (rho[u], rho[v], rho[W.join(u, v)]) == (3, 1, 5)


def test_nc_recurrence():
    assert F.nc_charpoly_recurrence(1) == ExactPoly.const(1)
    assert F.nc_charpoly_recurrence(2) == t - 1
    assert F.nc_charpoly_recurrence(3) == t**2 - 3 * t + 2
    p4 = F.nc_charpoly_recurrence(4)
    assert p4 == t**3 - 6 * t**2 + 10 * t - 5 and p4.evaluate(0) == -F.catalan(3)
    for n in range(1, 8):
        assert F.nc_charpoly_recurrence(n) == char_poly(F.noncrossing_lattice(n))


def test_shuffle_formulas():
    assert F.shuffle_charpoly_formula(2, 1) == (t - 1) ** 2 * (t - 3)
    for n in range(5):
        assert F.shuffle_charpoly_formula(0, n) == (t - 1) ** n
    assert F.greene_mobius(2, 1) == -3 == mobius_bottom(F.shuffle_poset(2, 1), 11)
    for m in range(4):
        for n in range(4):
            chi = char_poly(F.shuffle_poset(m, n))
            assert F.shuffle_charpoly_formula(m, n) == F.greene_charpoly(m, n) == chi
            assert chi.evaluate(0) == F.greene_mobius(m, n)


def test_kreweras():
    for n in range(1, 9):
        N = F.noncrossing_lattice(n)
        assert mobius_bottom(N, N.top) == F.kreweras_mobius(n)


def test_caps(monkeypatch):
    with pytest.raises(TooLarge):
        F.noncrossing_lattice(9)
    with pytest.raises(TooLarge):
        F.shuffle_poset(4, 4)
    monkeypatch.setenv("LF_CAP", "10")
    with pytest.raises(TooLarge):
        F.partition_lattice(4)
    assert F.partition_lattice(3).n == 5


def test_generate():
    assert F.generate("divisor", 30).n == 8
    with pytest.raises(LatticeError):
        F.generate("nope", 3)
