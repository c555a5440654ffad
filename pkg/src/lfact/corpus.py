"""Named collection of lattices used by the verification suites."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Iterator

from lfact import families as F
from lfact.lattice import FiniteLattice, from_order, product


@dataclass
class CorpusItem:
    name: str
    build: Callable[[], FiniteLattice]
    chain: Callable[[FiniteLattice], list[int]] | None = None   # preferred maximal chain
    tags: frozenset = field(default_factory=frozenset)
    _lattice: FiniteLattice | None = field(default=None, repr=False)

    @property
    def lattice(self) -> FiniteLattice:
        if self._lattice is None:
            self._lattice = self.build()
        return self._lattice

    def preferred_chain(self) -> list[int]:
        L = self.lattice
        return self.chain(L) if self.chain else L.first_maximal_chain()


def _pi_chain(n):
    return lambda L: F.standard_partition_chain(L, n)


def meet_closed_sublattice(base: FiniteLattice, keep: set[int]) -> FiniteLattice:
    """Close ``keep`` under meets and add the top; the result is a lattice."""
    S = set(keep) | {base.top}
    todo = list(S)
    while todo:
        x = todo.pop()
        for y in list(S):
            z = base.meet(x, y)
            if z not in S:
                S.add(z)
                todo.append(z)
    elems = sorted(S)
    return from_order([base.labels[x] for x in elems], lambda i, j: base.leq(elems[i], elems[j]))


RANDOM_BASES: list[tuple[str, Callable[[], FiniteLattice]]] = [
    ("boolean4", lambda: F.boolean_lattice(4)),
    ("pi4", lambda: F.partition_lattice(4)),
    ("nc5", lambda: F.noncrossing_lattice(5)),
    ("divisor60", lambda: F.divisor_lattice(60)),
    ("shuffle22", lambda: F.shuffle_poset(2, 2)),
    ("tamari4", lambda: F.tamari(4)),
]


def random_sublattices(count: int = 100, seed: int = 0) -> list[CorpusItem]:
    rng = random.Random(seed)
    bases = {name: build() for name, build in RANDOM_BASES}
    items = []
    for k in range(count):
        name, _ = RANDOM_BASES[k % len(RANDOM_BASES)]
        base = bases[name]
        p = rng.uniform(0.2, 0.7)
        keep = {x for x in range(base.n) if rng.random() < p}
        L = meet_closed_sublattice(base, keep)
        items.append(CorpusItem(f"random/{k:03d}/{name}", lambda L=L: L, tags=frozenset({"random"})))
    return items


def family_items() -> list[CorpusItem]:
    items: list[CorpusItem] = []
    for n in range(1, 6):
        items.append(CorpusItem(f"chain/{n}", lambda n=n: F.chain(n), tags=frozenset({"chain", "ll"})))
    for n in range(0, 5):
        items.append(CorpusItem(f"boolean/{n}", lambda n=n: F.boolean_lattice(n),
                                tags=frozenset({"boolean", "ll"})))
    for n in (12, 30, 36, 60, 72):
        items.append(CorpusItem(f"divisor/{n}", lambda n=n: F.divisor_lattice(n),
                                tags=frozenset({"divisor", "ll"})))
    for n in range(1, 7):
        items.append(CorpusItem(f"pi/{n}", lambda n=n: F.partition_lattice(n), _pi_chain(n),
                                frozenset({"pi", "ll"})))
    for n in range(1, 9):
        items.append(CorpusItem(f"nc/{n}", lambda n=n: F.noncrossing_lattice(n), _pi_chain(n),
                                frozenset({"nc", "ll"})))
    for m in range(0, 8):
        for n in range(0, 8 - m):
            items.append(CorpusItem(f"shuffle/{m},{n}", lambda m=m, n=n: F.shuffle_poset(m, n),
                                    tags=frozenset({"shuffle"})))
    for n in range(1, 7):
        items.append(CorpusItem(f"tamari/{n}", lambda n=n: F.tamari(n), tags=frozenset({"tamari"})))
    items.append(CorpusItem("pentagon", F.pentagon, tags=frozenset({"small"})))
    items.append(CorpusItem("diamond", F.diamond, tags=frozenset({"small"})))
    return items


def derived_items() -> list[CorpusItem]:
    duals = [
        ("pi/4", lambda: F.partition_lattice(4)),
        ("nc/5", lambda: F.noncrossing_lattice(5)),
        ("shuffle/2,2", lambda: F.shuffle_poset(2, 2)),
        ("tamari/4", lambda: F.tamari(4)),
        ("divisor/60", lambda: F.divisor_lattice(60)),
        ("pentagon", F.pentagon),
    ]
    items = [CorpusItem(f"dual/{name}", lambda b=b: b().dual(), tags=frozenset({"dual"}))
             for name, b in duals]
    products = [
        ("chain/2*pentagon", lambda: product(F.chain(2), F.pentagon())),
        ("chain/3*diamond", lambda: product(F.chain(3), F.diamond())),
        ("pentagon*pentagon", lambda: product(F.pentagon(), F.pentagon())),
        ("nc/4*chain/2", lambda: product(F.noncrossing_lattice(4), F.chain(2))),
        ("pi/3*shuffle/1,1", lambda: product(F.partition_lattice(3), F.shuffle_poset(1, 1))),
    ]
    items += [CorpusItem(f"product/{name}", b, tags=frozenset({"product"})) for name, b in products]
    return items


def corpus(seed: int = 0, random_count: int = 100, max_size: int | None = None) -> Iterator[CorpusItem]:
    """All corpus items in a fixed order; ``max_size`` drops larger lattices."""
    for item in family_items() + derived_items() + random_sublattices(random_count, seed):
        if max_size is not None and item.lattice.n > max_size:
            continue
        yield item


def ll_instances() -> list[CorpusItem]:
    """Items listed as LL candidates together with their intended chains."""
    return [it for it in family_items() if "ll" in it.tags]
