import random

from hypothesis import strategies as st

from lfact import families as F
from lfact.corpus import meet_closed_sublattice

_BASES = {
    "boolean4": F.boolean_lattice(4),
    "pi4": F.partition_lattice(4),
    "tamari4": F.tamari(4),
    "shuffle21": F.shuffle_poset(2, 1),
    "divisor36": F.divisor_lattice(36),
}


@st.composite
def small_lattices(draw):
    """Random meet-closed subsets (plus the top) of a few base lattices."""
    base = _BASES[draw(st.sampled_from(sorted(_BASES)))]
    seed = draw(st.integers(0, 2**32 - 1))
    rng = random.Random(seed)
    keep = {x for x in range(base.n) if rng.random() < 0.5}
    return meet_closed_sublattice(base, keep)
