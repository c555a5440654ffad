"""Generators for the standard lattice families and their closed-form polynomials.

Every generator orders elements by height and then label, so index 0 is the
bottom, the last index is the top, and index order is a linear extension.
Labels are plain strings so the JSON form round-trips exactly:

* set partitions show non-singleton blocks joined by ``/`` (``13/24``), the
  discrete partition is ``0``;
* shuffle words use ``d e f ...`` for x-letters and ``D E F ...`` for
  y-letters, the empty word is ``∅``;
* Tamari trees are written ``(LR)`` with ``.`` for a leaf.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

from lfact.errors import LatticeError, TooLarge
from lfact.lattice import FiniteLattice
from lfact.poly import ExactPoly

X_LETTERS = "defghijklmnopqrstuvwxyz"
Y_LETTERS = "DEFGHIJKLMNOPQRSTUVWXYZ"
EMPTY_WORD = "∅"

# parameter caps; LF_CAP (an element count) replaces them when set
CAPS = {"nc": 8, "pi": 6, "shuffle": 7, "tamari": 6, "boolean": 8, "chain": 512, "divisor": 512}


def binom(a: int, b: int) -> int:
    if b < 0 or a < 0 or b > a:
        return 0
    return comb(a, b)


def catalan(n: int) -> int:
    """Closed form ``binom(2n, n) / (n + 1)``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return comb(2 * n, n) // (n + 1)


def catalan_recurrence(n: int) -> int:
    """``C_n = sum_{i<n} C_i C_{n-1-i}`` with ``C_0 = 1``."""
    c = [1]
    for k in range(1, n + 1):
        c.append(sum(c[i] * c[k - 1 - i] for i in range(k)))
    return c[n]


def bell(n: int) -> int:
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for v in row:
            nxt.append(nxt[-1] + v)
        row = nxt
    return row[0]


def shuffle_count(m: int, n: int) -> int:
    return sum(comb(m, i) * comb(n, j) * comb(i + j, i) for i in range(m + 1) for j in range(n + 1))


def _check_cap(family: str, param: int, size: int) -> None:
    env = os.environ.get("LF_CAP")
    if env:
        if size > int(env):
            raise TooLarge(f"{family}: {size} elements exceeds LF_CAP={env}")
    elif param > CAPS[family]:
        raise TooLarge(f"{family}: parameter {param} exceeds cap {CAPS[family]} (set LF_CAP to override)")


def _finish(labels: Sequence[str], uppers: dict[int, Iterable[int]]) -> FiniteLattice:
    """Reorder by (height, label) and build."""
    n = len(labels)
    lowers: list[list[int]] = [[] for _ in range(n)]
    for x, ups in uppers.items():
        for y in ups:
            lowers[y].append(x)
    height: dict[int, int] = {}

    def h(x):
        if x not in height:
            height[x] = 1 + max((h(y) for y in lowers[x]), default=-1)
        return height[x]

    order = sorted(range(n), key=lambda x: (h(x), labels[x]))
    pos = {old: new for new, old in enumerate(order)}
    covers = sorted((pos[x], pos[y]) for x, ups in uppers.items() for y in ups)
    return FiniteLattice([labels[i] for i in order], covers)


# set partitions

@dataclass(frozen=True)
class SetPartition:
    """Partition of ``{1..n}``; blocks sorted internally and by minimum."""

    n: int
    blocks: tuple[tuple[int, ...], ...]

    @classmethod
    def from_blocks(cls, n: int, blocks: Iterable[Iterable[int]]) -> SetPartition:
        bl = [tuple(sorted(b)) for b in blocks if b]
        covered = sorted(v for b in bl for v in b)
        seen = set(covered)
        if len(seen) != len(covered) or not seen <= set(range(1, n + 1)):
            raise LatticeError(f"blocks {bl} are not disjoint subsets of [{n}]")
        bl += [(v,) for v in range(1, n + 1) if v not in seen]
        return cls(n, tuple(sorted(bl)))

    @classmethod
    def parse(cls, text: str, n: int) -> SetPartition:
        text = text.strip()
        if text in ("", "0", "0̂"):
            return cls.from_blocks(n, [])
        blocks = []
        for part in text.split("/"):
            if "," in part or n >= 10:
                blocks.append([int(v) for v in part.split(",")])
            else:
                blocks.append([int(ch) for ch in part])
        return cls.from_blocks(n, blocks)

    def block_of(self) -> dict[int, int]:
        return {v: i for i, b in enumerate(self.blocks) for v in b}

    @property
    def label(self) -> str:
        big = [b for b in self.blocks if len(b) > 1]
        if not big:
            return "0"
        sep = "," if self.n >= 10 else ""
        return "/".join(sep.join(map(str, b)) for b in big)

    def rank(self) -> int:
        return self.n - len(self.blocks)

    def refines(self, other: SetPartition) -> bool:
        where = other.block_of()
        return all(len({where[v] for v in b}) == 1 for b in self.blocks)

    def meet(self, other: SetPartition) -> SetPartition:
        out = []
        for b in self.blocks:
            for c in other.blocks:
                common = set(b) & set(c)
                if common:
                    out.append(common)
        return SetPartition.from_blocks(self.n, out)

    def join(self, other: SetPartition) -> SetPartition:
        """Join in the full partition lattice (finest common coarsening)."""
        parent = list(range(self.n + 1))

        def find(v):
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        for b in self.blocks + other.blocks:
            for v in b[1:]:
                parent[find(v)] = find(b[0])
        groups: dict[int, list[int]] = {}
        for v in range(1, self.n + 1):
            groups.setdefault(find(v), []).append(v)
        return SetPartition.from_blocks(self.n, groups.values())

    def __str__(self):
        return self.label


def is_noncrossing(p: SetPartition) -> bool:
    where = p.block_of()
    n = p.n
    for i, j, k, l in combinations(range(1, n + 1), 4):
        if where[i] == where[k] and where[j] == where[l] and where[i] != where[j]:
            return False
    return True


def set_partitions(n: int) -> list[SetPartition]:
    """All partitions of ``[n]`` via restricted growth strings."""
    out = []

    def rec(i, rgs, nblocks):
        if i == n:
            blocks: list[list[int]] = [[] for _ in range(nblocks)]
            for v, b in enumerate(rgs, start=1):
                blocks[b].append(v)
            out.append(SetPartition.from_blocks(n, blocks))
            return
        for b in range(nblocks + 1):
            rgs.append(b)
            rec(i + 1, rgs, max(nblocks, b + 1))
            rgs.pop()

    rec(0, [], 0)
    return out


def _partition_lattice(parts: list[SetPartition]) -> FiniteLattice:
    index = {p: i for i, p in enumerate(parts)}
    uppers: dict[int, list[int]] = {}
    for i, p in enumerate(parts):
        ups = []
        for a, b in combinations(range(len(p.blocks)), 2):
            merged = [blk for k, blk in enumerate(p.blocks) if k not in (a, b)]
            merged.append(p.blocks[a] + p.blocks[b])
            q = SetPartition.from_blocks(p.n, merged)
            if q in index:
                ups.append(index[q])
        uppers[i] = ups
    return _finish([p.label for p in parts], uppers)


def partition_lattice(n: int) -> FiniteLattice:
    """Π_n ordered by refinement; covers merge two blocks."""
    if n < 1:
        raise LatticeError("n must be at least 1")
    _check_cap("pi", n, bell(n))
    return _partition_lattice(set_partitions(n))


def noncrossing_lattice(n: int) -> FiniteLattice:
    """NC_n: the non-crossing partitions under refinement.

    Covers are the non-crossing two-block merges; meets coincide with Π_n,
    joins are the least non-crossing upper bounds found by the generic build.
    """
    if n < 1:
        raise LatticeError("n must be at least 1")
    _check_cap("nc", n, catalan(n))
    return _partition_lattice([p for p in set_partitions(n) if is_noncrossing(p)])


def partition_of(L: FiniteLattice, x: int, n: int) -> SetPartition:
    return SetPartition.parse(L.labels[x], n)


def standard_partition_chain(L: FiniteLattice, n: int) -> list[int]:
    """``0 < 12 < 123 < ... < 12...n``; valid in both Π_n and NC_n."""
    labels = ["0"] + ["".join(str(v) for v in range(1, k + 1)) for k in range(2, n + 1)]
    if n >= 10:
        labels = ["0"] + [",".join(str(v) for v in range(1, k + 1)) for k in range(2, n + 1)]
    return [L.index(lab) for lab in labels]


# small families

def chain(n: int) -> FiniteLattice:
    """Chain with ``n`` elements labelled ``0 .. n-1``."""
    if n < 1:
        raise LatticeError("a chain needs at least one element")
    _check_cap("chain", n, n)
    return FiniteLattice([str(i) for i in range(n)], [(i, i + 1) for i in range(n - 1)])


def _set_label(s: Iterable[int]) -> str:
    return "{" + ",".join(map(str, sorted(s))) + "}"


def boolean_lattice(n: int) -> FiniteLattice:
    """B_n: subsets of ``{1..n}`` labelled ``{1,2}``; the empty set is ``{}``."""
    if n < 0:
        raise LatticeError("n must be non-negative")
    _check_cap("boolean", n, 2 ** n)
    subsets = sorted(range(2 ** n), key=lambda m: (bin(m).count("1"), [i for i in range(n) if m >> i & 1]))
    pos = {m: i for i, m in enumerate(subsets)}
    labels = [_set_label(i + 1 for i in range(n) if m >> i & 1) for m in subsets]
    covers = [(pos[m], pos[m | 1 << i]) for m in subsets for i in range(n) if not m >> i & 1]
    return FiniteLattice(labels, sorted(covers))


def _prime_factors(n: int) -> list[int]:
    out, p = [], 2
    while p * p <= n:
        while n % p == 0:
            out.append(p)
            n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def divisor_lattice(n: int) -> FiniteLattice:
    """D_n: divisors of ``n`` under divisibility."""
    if n < 1:
        raise LatticeError("n must be positive")
    divs = [d for d in range(1, n + 1) if n % d == 0]
    _check_cap("divisor", len(divs), len(divs))
    primes = sorted(set(_prime_factors(n)))
    divs.sort(key=lambda d: (len(_prime_factors(d)), d))
    pos = {d: i for i, d in enumerate(divs)}
    covers = sorted((pos[d], pos[d * p]) for d in divs for p in primes if n % (d * p) == 0)
    return FiniteLattice([str(d) for d in divs], covers)


def _trees(n: int):
    if n == 0:
        return [None]
    out = []
    for k in range(n):
        for left in _trees(k):
            for right in _trees(n - 1 - k):
                out.append((left, right))
    return out


def tree_label(t) -> str:
    if t is None:
        return "."
    return "(" + tree_label(t[0]) + tree_label(t[1]) + ")"


def _right_rotations(t):
    if t is None:
        return
    left, right = t
    if left is not None:
        a, b = left
        yield (a, (b, right))
    for l2 in _right_rotations(left):
        yield (l2, right)
    for r2 in _right_rotations(right):
        yield (left, r2)


def tamari(n: int) -> FiniteLattice:
    """Tamari lattice on binary trees with ``n`` internal nodes; covers are right rotations."""
    if n < 0:
        raise LatticeError("n must be non-negative")
    _check_cap("tamari", n, catalan(n))
    trees = _trees(n)
    index = {t: i for i, t in enumerate(trees)}
    uppers = {i: sorted({index[s] for s in _right_rotations(t)}) for i, t in enumerate(trees)}
    return _finish([tree_label(t) for t in trees], uppers)


def pentagon() -> FiniteLattice:
    """N_5 with ``0 < a < b < 1`` and ``0 < c < 1``."""
    return FiniteLattice(["0", "a", "b", "c", "1"], [(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)])


def diamond() -> FiniteLattice:
    """M_3."""
    return FiniteLattice(["0", "a", "b", "c", "1"], [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)])


# shuffle posets

@dataclass(frozen=True)
class ShuffleWord:
    """A shuffle of a subword of ``x`` with a subword of ``y``."""

    word: str
    m: int
    n: int

    def __post_init__(self):
        xs, ys = X_LETTERS[: self.m], Y_LETTERS[: self.n]
        if len(set(self.word)) != len(self.word):
            raise LatticeError(f"{self.word!r} repeats a letter")
        for ch in self.word:
            if ch not in xs and ch not in ys:
                raise LatticeError(f"{ch!r} is not a letter of W_{{{self.m},{self.n}}}")
        if not _in_order(self.x_part, xs) or not _in_order(self.y_part, ys):
            raise LatticeError(f"{self.word!r} is not a shuffle of subwords of x and y")

    @classmethod
    def parse(cls, text: str, m: int, n: int) -> ShuffleWord:
        return cls("" if text == EMPTY_WORD else text, m, n)

    @property
    def x_part(self) -> str:
        return "".join(ch for ch in self.word if ch.islower())

    @property
    def y_part(self) -> str:
        return "".join(ch for ch in self.word if ch.isupper())

    @property
    def label(self) -> str:
        return self.word or EMPTY_WORD

    def rank(self) -> int:
        return (self.m - len(self.x_part)) + len(self.y_part)

    def __str__(self):
        return self.label


def _in_order(sub: str, full: str) -> bool:
    it = iter(full)
    return all(ch in it for ch in sub)


def _restrict(word: str, letters: set[str]) -> str:
    return "".join(ch for ch in word if ch in letters)


def order_leq(v: ShuffleWord, w: ShuffleWord) -> bool:
    """``v <= w``: v has more x-letters, fewer y-letters, and they agree on common letters."""
    vx, wx = set(v.x_part), set(w.x_part)
    vy, wy = set(v.y_part), set(w.y_part)
    if not (vx >= wx and vy <= wy):
        return False
    return _restrict(v.word, set(w.word)) == _restrict(w.word, set(v.word))


def cover(v: ShuffleWord, w: ShuffleWord) -> bool:
    """``w`` arises from ``v`` by adding one y-letter or deleting one x-letter."""
    return order_leq(v, w) and w.rank() == v.rank() + 1


def _crossed(u: str, v: str, xs: str, ys: str) -> set[str]:
    # with xs/ys swapped this detects crossed y-letters, which gives meets
    common = set(u) & set(v) & set(xs)
    out = set()
    for a in common:
        for w1, w2 in ((u, v), (v, u)):
            p1, p2 = w1.index(a), w2.index(a)
            after_in_1 = [ys.index(c) for c in w1[p1 + 1:] if c in ys]
            before_in_2 = [ys.index(c) for c in w2[:p2] if c in ys]
            if after_in_1 and before_in_2 and min(after_in_1) <= max(before_in_2):
                out.add(a)
    return out


def crossed_letters(u: ShuffleWord, v: ShuffleWord) -> set[str]:
    xs, ys = X_LETTERS[: u.m], Y_LETTERS[: u.n]
    return _crossed(u.word, v.word, xs, ys)


def _word_join(u: str, v: str, xs: str, ys: str) -> str:
    keep_x = (set(u) & set(v) & set(xs)) - _crossed(u, v, xs, ys)
    keep_y = (set(u) | set(v)) & set(ys)
    letters = keep_x | keep_y

    def before(a, b):
        # relative order of a and b forced by x, y or one of the two words
        if a in xs and b in xs:
            return xs.index(a) < xs.index(b)
        if a in ys and b in ys:
            return ys.index(a) < ys.index(b)
        for w in (u, v):
            if a in w and b in w:
                return w.index(a) < w.index(b)
        raise LatticeError(f"order of {a} and {b} is not determined")

    out: list[str] = []
    for ch in sorted(letters, key=lambda c: (xs + ys).index(c)):
        k = 0
        while k < len(out) and before(out[k], ch):
            k += 1
        out.insert(k, ch)
    for a, b in zip(out, out[1:]):
        if not before(a, b):
            raise LatticeError(f"join of {u!r} and {v!r} is not a word")
    return "".join(out)


def shuffle_join(u: ShuffleWord, v: ShuffleWord) -> ShuffleWord:
    """Greene's join: uncrossed common x-letters, all y-letters."""
    xs, ys = X_LETTERS[: u.m], Y_LETTERS[: u.n]
    return ShuffleWord(_word_join(u.word, v.word, xs, ys), u.m, u.n)


def shuffle_meet(u: ShuffleWord, v: ShuffleWord) -> ShuffleWord:
    """Meet as the join of W_{n,m} with the letter roles exchanged."""
    xs, ys = X_LETTERS[: u.m], Y_LETTERS[: u.n]
    return ShuffleWord(_word_join(u.word, v.word, ys, xs), u.m, u.n)


def shuffle_words(m: int, n: int) -> list[ShuffleWord]:
    xs, ys = X_LETTERS[:m], Y_LETTERS[:n]
    out = []
    for i in range(m + 1):
        for xsub in combinations(xs, i):
            for j in range(n + 1):
                for ysub in combinations(ys, j):
                    for ypos in combinations(range(i + j), j):
                        word, xi, yi = [], iter(xsub), iter(ysub)
                        yset = set(ypos)
                        for k in range(i + j):
                            word.append(next(yi) if k in yset else next(xi))
                        out.append(ShuffleWord("".join(word), m, n))
    return out


def shuffle_poset(m: int, n: int) -> FiniteLattice:
    """W_{m,n} with bottom ``x`` and top ``y``; covers add a y-letter or delete an x-letter."""
    if m < 0 or n < 0:
        raise LatticeError("m and n must be non-negative")
    _check_cap("shuffle", m + n, shuffle_count(m, n))
    words = shuffle_words(m, n)
    index = {w.word: i for i, w in enumerate(words)}
    ys = Y_LETTERS[:n]
    uppers: dict[int, list[int]] = {}
    for i, w in enumerate(words):
        ups = set()
        s = w.word
        for k, ch in enumerate(s):
            if ch.islower():
                ups.add(index[s[:k] + s[k + 1:]])
        for y in ys:
            if y in s:
                continue
            for k in range(len(s) + 1):
                cand = s[:k] + y + s[k:]
                if cand in index:
                    ups.add(index[cand])
        uppers[i] = sorted(ups)
    return _finish([w.label for w in words], uppers)


def word_of(L: FiniteLattice, x: int, m: int, n: int) -> ShuffleWord:
    return ShuffleWord.parse(L.labels[x], m, n)


# closed forms

def nc_charpoly_recurrence(n: int) -> ExactPoly:
    """chi(NC_n) from chi(NC_1) = 1 and chi(NC_k) = t chi(NC_{k-1}) - sum_i chi(NC_i) chi(NC_{k-i})."""
    if n < 1:
        raise ValueError("n must be at least 1")
    t = ExactPoly.t()
    chi = {1: ExactPoly.const(1)}
    for k in range(2, n + 1):
        acc = t * chi[k - 1]
        for i in range(1, k):
            acc = acc - chi[i] * chi[k - i]
        chi[k] = acc
    return chi[n]


def shuffle_charpoly_formula(m: int, n: int) -> ExactPoly:
    """``(t-1)^m sum_i (-1)^i C(n,i) C(m+i,i) t^(n-i)``."""
    s = ExactPoly({n - i: (-1) ** i * comb(n, i) * comb(m + i, i) for i in range(n + 1)})
    return ExactPoly({1: 1, 0: -1}) ** m * s


def greene_charpoly(m: int, n: int) -> ExactPoly:
    """Greene's form ``(t-1)^(m+n) sum_i C(m,i) C(n,i) (1-t)^(-i)``.

    Since ``(1-t)^(-i) = (-1)^i (t-1)^(-i)`` and ``i <= min(m, n)``, each term
    is the polynomial ``(-1)^i C(m,i) C(n,i) (t-1)^(m+n-i)``.
    """
    t_minus_1 = ExactPoly({1: 1, 0: -1})
    out = ExactPoly()
    for i in range(min(m, n) + 1):
        out = out + (-1) ** i * comb(m, i) * comb(n, i) * t_minus_1 ** (m + n - i)
    return out


def kreweras_mobius(n: int) -> int:
    """mu(NC_n) = (-1)^(n-1) C_(n-1)."""
    return (-1) ** (n - 1) * catalan(n - 1)


def greene_mobius(m: int, n: int) -> int:
    return (-1) ** (m + n) * comb(m + n, n)


GENERATORS = {
    "nc": noncrossing_lattice,
    "pi": partition_lattice,
    "shuffle": shuffle_poset,
    "divisor": divisor_lattice,
    "boolean": boolean_lattice,
    "tamari": tamari,
    "chain": chain,
    "pentagon": pentagon,
    "diamond": diamond,
}


def generate(family: str, *args: int) -> FiniteLattice:
    if family not in GENERATORS:
        raise LatticeError(f"unknown family {family!r}; choose from {sorted(GENERATORS)}")
    return GENERATORS[family](*args)
