"""Finite lattices over dense integer indices.

A lattice is given by its labels and its cover relation.  On construction the
order (as bitsets), the meet and join tables, the bottom and the top are
computed and every lattice axiom is checked, so any ``FiniteLattice`` that
exists is a genuine lattice.  Instances are immutable afterwards; derived data
(Möbius rows, numpy views, left-modular sets) is cached lazily in ``_cache``.
"""

from __future__ import annotations

import json
from fractions import Fraction
from graphlib import CycleError, TopologicalSorter
from typing import Any, Hashable, Iterable, Iterator, Sequence

import numpy as np

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
from lfact.poly import format_rational


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _hashable(label):
    if isinstance(label, list):
        return tuple(_hashable(v) for v in label)
    return label


class FiniteLattice:
    """Immutable finite lattice.

    Attributes
    ----------
    labels : tuple
        Opaque element payloads, ``labels[i]`` names element ``i``.
    covers : tuple of (lo, hi)
        The cover relation in input order.
    up, down : list of int
        Bitsets; bit ``y`` of ``up[x]`` is set iff ``x <= y``.
    meet_table, join_table : list of list of int
    bottom, top : int
    rank : tuple of Fraction or None
        Optional stored rank (only carried through JSON I/O).
    origin : tuple of int or None
        For intervals and sublattices, the parent index of each element.
    """

    def __init__(self, labels: Iterable[Hashable], covers: Iterable[Sequence[int]],
                 rank: Sequence | None = None):
        labels = tuple(_hashable(v) for v in labels)
        n = len(labels)
        if n == 0:
            raise NoUniqueBottom("a lattice needs at least one element")
        if len(set(labels)) != n:
            raise LatticeError("labels must be distinct")
        cover_list = []
        seen = set()
        for c in covers:
            lo, hi = c
            if not (isinstance(lo, int) and isinstance(hi, int)) or not (0 <= lo < n and 0 <= hi < n):
                raise LatticeError(f"cover {tuple(c)} references an invalid index")
            if (lo, hi) in seen:
                raise LatticeError(f"duplicate cover {(lo, hi)}")
            if lo == hi:
                raise NotAcyclic(f"self-loop at {lo}")
            seen.add((lo, hi))
            cover_list.append((lo, hi))

        uppers: list[list[int]] = [[] for _ in range(n)]
        lowers: list[list[int]] = [[] for _ in range(n)]
        for lo, hi in cover_list:
            uppers[lo].append(hi)
            lowers[hi].append(lo)
        try:
            topo = list(TopologicalSorter({x: lowers[x] for x in range(n)}).static_order())
        except CycleError as exc:
            raise NotAcyclic(f"cover relation has a cycle: {exc.args[1]}") from None

        minimal = [x for x in range(n) if not lowers[x]]
        maximal = [x for x in range(n) if not uppers[x]]
        if len(minimal) != 1:
            raise NoUniqueBottom(f"minimal elements: {minimal}")
        if len(maximal) != 1:
            raise NoUniqueTop(f"maximal elements: {maximal}")

        up = [0] * n
        for x in reversed(topo):
            m = 1 << x
            for c in uppers[x]:
                m |= up[c]
            up[x] = m
        down = [0] * n
        for x in topo:
            m = 1 << x
            for c in lowers[x]:
                m |= down[c]
            down[x] = m

        for x in range(n):
            cmask = 0
            for c in uppers[x]:
                cmask |= 1 << c
            for c in uppers[x]:
                hit = up[c] & ~(1 << c) & cmask
                if hit:
                    raise TransitiveCoverEdge(x, next(iter_bits(hit)))

        meet = _bound_table(down, n, MeetFails, up)
        join = _bound_table(up, n, JoinFails, down)
        self._setup(labels, tuple(cover_list), uppers, lowers, topo, up, down,
                    meet, join, minimal[0], maximal[0])
        self.rank = _parse_rank(rank, n) if rank is not None else None
        self.origin = None
        self.parent = None

    def _setup(self, labels, covers, uppers, lowers, topo, up, down, meet, join, bottom, top):
        self.labels = labels
        self.covers = covers
        self.n = len(labels)
        self.upper_covers = [tuple(u) for u in uppers]
        self.lower_covers = [tuple(d) for d in lowers]
        self.topo = tuple(topo)
        self.up = up
        self.down = down
        self.meet_table = meet
        self.join_table = join
        self.bottom = bottom
        self.top = top
        self._index = {lab: i for i, lab in enumerate(labels)}
        self._cache: dict[Any, Any] = {}

    @classmethod
    def _trusted(cls, labels, covers, up, down, meet, join, bottom, top,
                 origin=None, parent=None, rank=None) -> FiniteLattice:
        """Build from data already known to form a lattice (intervals, duals, products)."""
        self = cls.__new__(cls)
        n = len(labels)
        uppers: list[list[int]] = [[] for _ in range(n)]
        lowers: list[list[int]] = [[] for _ in range(n)]
        for lo, hi in covers:
            uppers[lo].append(hi)
            lowers[hi].append(lo)
        topo = sorted(range(n), key=lambda x: down[x].bit_count())
        self._setup(tuple(labels), tuple(covers), uppers, lowers, topo, up, down,
                    meet, join, bottom, top)
        self.rank = rank
        self.origin = origin
        self.parent = parent
        return self

    # basic queries

    def __len__(self):
        return self.n

    def __repr__(self):
        return f"FiniteLattice(n={self.n}, covers={len(self.covers)})"

    def index(self, label) -> int:
        try:
            return self._index[_hashable(label)]
        except KeyError:
            raise KeyError(f"no element labelled {label!r}") from None

    def label(self, x: int):
        return self.labels[x]

    def leq(self, x: int, y: int) -> bool:
        return bool((self.up[x] >> y) & 1)

    def lt(self, x: int, y: int) -> bool:
        return x != y and bool((self.up[x] >> y) & 1)

    def comparable(self, x: int, y: int) -> bool:
        return self.leq(x, y) or self.leq(y, x)

    def covered_by(self, x: int, y: int) -> bool:
        return y in self.upper_covers[x]

    def meet(self, x: int, y: int) -> int:
        return self.meet_table[x][y]

    def join(self, x: int, y: int) -> int:
        return self.join_table[x][y]

    def meet_all(self, xs: Iterable[int]) -> int:
        out = self.top
        for x in xs:
            out = self.meet_table[out][x]
        return out

    def join_all(self, xs: Iterable[int]) -> int:
        out = self.bottom
        for x in xs:
            out = self.join_table[out][x]
        return out

    def atoms(self) -> list[int]:
        return sorted(self.upper_covers[self.bottom])

    def coatoms(self) -> list[int]:
        return sorted(self.lower_covers[self.top])

    def atoms_below(self, x: int) -> list[int]:
        return [a for a in self.atoms() if self.leq(a, x)]

    def atomic_part(self, x: int) -> int:
        """Join of the atoms below ``x``: the largest atomic element of [0, x]."""
        return self.join_all(self.atoms_below(x))

    def is_atomic(self) -> bool:
        return all(self.atomic_part(x) == x for x in range(self.n))

    def up_set(self, x: int) -> list[int]:
        """Elements ``>= x`` in topological order."""
        key = ("up_set", x)
        got = self._cache.get(key)
        if got is None:
            got = sorted(iter_bits(self.up[x]), key=self.topo_position.__getitem__)
            self._cache[key] = got
        return got

    def down_set(self, x: int) -> list[int]:
        return sorted(iter_bits(self.down[x]), key=self.topo_position.__getitem__)

    def between(self, lo: int, hi: int) -> list[int]:
        return sorted(iter_bits(self.up[lo] & self.down[hi]), key=self.topo_position.__getitem__)

    @property
    def topo_position(self) -> list[int]:
        pos = self._cache.get("topo_position")
        if pos is None:
            pos = [0] * self.n
            for i, x in enumerate(self.topo):
                pos[x] = i
            self._cache["topo_position"] = pos
        return pos

    def strict_up_lists(self) -> list[list[int]]:
        got = self._cache.get("strict_up")
        if got is None:
            got = [[y for y in iter_bits(self.up[x]) if y != x] for x in range(self.n)]
            self._cache["strict_up"] = got
        return got

    # numpy views, used by the vectorized scans in modularity

    @property
    def meet_array(self) -> np.ndarray:
        arr = self._cache.get("meet_array")
        if arr is None:
            arr = np.array(self.meet_table, dtype=np.int32).reshape(self.n, self.n)
            self._cache["meet_array"] = arr
        return arr

    @property
    def join_array(self) -> np.ndarray:
        arr = self._cache.get("join_array")
        if arr is None:
            arr = np.array(self.join_table, dtype=np.int32).reshape(self.n, self.n)
            self._cache["join_array"] = arr
        return arr

    @property
    def lt_pairs(self) -> tuple[np.ndarray, np.ndarray]:
        """Arrays ``(Z, Y)`` listing every strict pair ``z < y``."""
        got = self._cache.get("lt_pairs")
        if got is None:
            zs, ys = [], []
            for z, ups in enumerate(self.strict_up_lists()):
                zs.extend([z] * len(ups))
                ys.extend(ups)
            got = (np.array(zs, dtype=np.int64), np.array(ys, dtype=np.int64))
            self._cache["lt_pairs"] = got
        return got

    @property
    def cover_pairs(self) -> tuple[np.ndarray, np.ndarray]:
        got = self._cache.get("cover_pairs")
        if got is None:
            lo = np.array([c[0] for c in self.covers], dtype=np.int64)
            hi = np.array([c[1] for c in self.covers], dtype=np.int64)
            got = (lo, hi)
            self._cache["cover_pairs"] = got
        return got

    # chains

    def is_maximal_chain(self, chain: Sequence[int]) -> bool:
        if not chain or chain[0] != self.bottom or chain[-1] != self.top:
            return False
        return all(self.covered_by(a, b) for a, b in zip(chain, chain[1:]))

    def first_maximal_chain(self) -> list[int]:
        chain = [self.bottom]
        while chain[-1] != self.top:
            chain.append(min(self.upper_covers[chain[-1]]))
        return chain

    # derived lattices

    def interval(self, lo: int, hi: int) -> FiniteLattice:
        """The sublattice ``[lo, hi]``; ``origin`` maps back to this lattice."""
        if not self.leq(lo, hi):
            raise NotComparable(f"{lo} is not below {hi}")
        elems = sorted(iter_bits(self.up[lo] & self.down[hi]))
        return self._restrict(elems, lo, hi)

    def _restrict(self, elems: list[int], lo: int, hi: int) -> FiniteLattice:
        # Only valid for subsets closed under meet/join whose covers are parent covers.
        local = {p: i for i, p in enumerate(elems)}
        covers = [(local[a], local[b]) for a, b in self.covers if a in local and b in local]
        mask = 0
        for p in elems:
            mask |= 1 << p
        up = [_remap_bits(self.up[p] & mask, local) for p in elems]
        down = [_remap_bits(self.down[p] & mask, local) for p in elems]
        meet = [[local[self.meet_table[p][q]] for q in elems] for p in elems]
        join = [[local[self.join_table[p][q]] for q in elems] for p in elems]
        sub = FiniteLattice._trusted([self.labels[p] for p in elems], covers, up, down,
                                     meet, join, local[lo], local[hi],
                                     origin=tuple(elems), parent=self)
        sub._local = local
        return sub

    def local_index(self, parent_index: int) -> int:
        """Index in this interval of a parent element."""
        return self._local[parent_index]

    def dual(self) -> FiniteLattice:
        n = self.n
        covers = [(hi, lo) for lo, hi in self.covers]
        return FiniteLattice._trusted(self.labels, covers, list(self.down), list(self.up),
                                      self.join_table, self.meet_table, self.top, self.bottom,
                                      origin=tuple(range(n)), parent=self)

    def complements_in(self, x: int, lo: int | None = None, hi: int | None = None) -> list[int]:
        """All ``y`` in ``[lo, hi]`` with ``x ∧ y = lo`` and ``x ∨ y = hi``."""
        lo = self.bottom if lo is None else lo
        hi = self.top if hi is None else hi
        if not (self.leq(lo, x) and self.leq(x, hi)):
            raise NotComparable(f"{x} is not in the interval [{lo}, {hi}]")
        mrow, jrow = self.meet_table[x], self.join_table[x]
        return [y for y in iter_bits(self.up[lo] & self.down[hi]) if mrow[y] == lo and jrow[y] == hi]

    def height(self) -> list[int]:
        """Length of the longest chain from the bottom to each element."""
        h = [0] * self.n
        for x in self.topo:
            for c in self.upper_covers[x]:
                if h[c] < h[x] + 1:
                    h[c] = h[x] + 1
        return h

    # JSON

    def to_dict(self) -> dict:
        out = {"labels": [_jsonable(v) for v in self.labels],
               "covers": [list(c) for c in self.covers]}
        if self.rank is not None:
            out["rank"] = [format_rational(r) for r in self.rank]
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False, separators=(",", ":"))

    @classmethod
    def from_dict(cls, data: dict) -> FiniteLattice:
        if "labels" not in data or "covers" not in data:
            raise LatticeError("lattice JSON needs 'labels' and 'covers'")
        return cls(data["labels"], data["covers"], rank=data.get("rank"))

    @classmethod
    def from_json(cls, text: str) -> FiniteLattice:
        return cls.from_dict(json.loads(text))


def product(first: FiniteLattice, second: FiniteLattice) -> FiniteLattice:
    """Cartesian product with the componentwise order; index ``i * |second| + j``."""
    n1, n2 = first.n, second.n
    labels = [(a, b) for a in first.labels for b in second.labels]

    def idx(i, j):
        return i * n2 + j

    covers = []
    for i in range(n1):
        for j in range(n2):
            for i2 in first.upper_covers[i]:
                covers.append((idx(i, j), idx(i2, j)))
            for j2 in second.upper_covers[j]:
                covers.append((idx(i, j), idx(i, j2)))

    def lift(bits1, bits2):
        out = 0
        for i in iter_bits(bits1):
            out |= bits2 << (i * n2)
        return out

    up = [lift(first.up[i], second.up[j]) for i in range(n1) for j in range(n2)]
    down = [lift(first.down[i], second.down[j]) for i in range(n1) for j in range(n2)]
    m1, m2, j1, j2 = first.meet_table, second.meet_table, first.join_table, second.join_table
    meet = [[idx(m1[a][c], m2[b][d]) for c in range(n1) for d in range(n2)]
            for a in range(n1) for b in range(n2)]
    join = [[idx(j1[a][c], j2[b][d]) for c in range(n1) for d in range(n2)]
            for a in range(n1) for b in range(n2)]
    return FiniteLattice._trusted(labels, covers, up, down, meet, join,
                                  idx(first.bottom, second.bottom), idx(first.top, second.top))


def from_order(labels: Sequence, leq) -> FiniteLattice:
    """Build a lattice from a full order predicate by extracting its Hasse diagram."""
    n = len(labels)
    above = [[y for y in range(n) if y != x and leq(x, y)] for x in range(n)]
    above_sets = [set(a) for a in above]
    covers = []
    for x in range(n):
        for y in above[x]:
            if not any(y in above_sets[z] for z in above[x]):
                covers.append((x, y))
    return FiniteLattice(labels, covers)


def _bound_table(sets, n, error, other):
    # glb(x, y) is the element whose down-set equals down(x) & down(y); dually for lub
    lookup = {s: i for i, s in enumerate(sets)}
    table = [[0] * n for _ in range(n)]
    for x in range(n):
        sx = sets[x]
        row = table[x]
        row[x] = x
        for y in range(x + 1, n):
            if (other[x] >> y) & 1:
                z = x
            elif (other[y] >> x) & 1:
                z = y
            else:
                z = lookup.get(sx & sets[y])
                if z is None:
                    raise error(x, y)
            row[y] = z
            table[y][x] = z
    return table


def _remap_bits(mask: int, local: dict[int, int]) -> int:
    out = 0
    for p in iter_bits(mask):
        out |= 1 << local[p]
    return out


def _parse_rank(rank, n) -> tuple[Fraction, ...]:
    vals = tuple(Fraction(r) if not isinstance(r, float) else Fraction(str(r)) for r in rank)
    if len(vals) != n:
        raise LatticeError(f"rank has {len(vals)} entries for {n} elements")
    return vals


def _jsonable(v):
    if isinstance(v, tuple):
        return [_jsonable(x) for x in v]
    return v
