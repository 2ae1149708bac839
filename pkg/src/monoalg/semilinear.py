"""Order structure on the tree above a cyclic element.

For cyclic c, the tree A_c carries a partial order: a >= b iff some power
of f sends a to b (staying inside the tree, with c at the bottom).  Down
from any element is a chain, any two elements meet, and x covers y exactly
when y = f(x), so the order and the partial operation determine each
other; their automorphism groups coincide.  check_aut_equality verifies
that on concrete inputs with two independent brute-force filters.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from . import core
from .core import FiniteMonounary


@dataclass(frozen=True)
class InducedPoset:
    """Reflexive order pairs (a, b) meaning a <= b, on original labels."""

    elements: tuple[int, ...]
    leq: frozenset[tuple[int, int]]
    covers: frozenset[tuple[int, int]]
    bottom: int


def build_order(A: FiniteMonounary, c: int) -> InducedPoset:
    if not 0 <= c < A.n:
        raise ValueError(f"element out of range: {c}")
    if not core.cyclic_mask(A)[c]:
        raise ValueError(f"{c} is not cyclic")
    _, elems = core.upper_set(A, c)
    f = A.table
    leq = set()
    covers = set()
    for a in elems:
        leq.add((a, a))
        x = a
        while x != c:
            y = f[x]
            covers.add((x, y))
            leq.add((y, a))
            x = y
    return InducedPoset(elems, frozenset(leq), frozenset(covers), c)


def meet(P: InducedPoset, x: int, y: int) -> int:
    """Greatest common lower bound; total because down-sets are chains
    through the bottom."""
    if x not in P.elements or y not in P.elements:
        raise ValueError("element not in the poset")
    down_x = {a for (a, b) in P.leq if b == x}
    down_y = {a for (a, b) in P.leq if b == y}
    commons = down_x & down_y
    for z in commons:
        if all((w, z) in P.leq for w in commons):
            return z
    raise RuntimeError("meet not found in a meet semilattice")


def check_aut_equality(
    A: FiniteMonounary, c: int, bound: int = 8
) -> tuple[bool, tuple[tuple[int, ...], ...], tuple[tuple[int, ...], ...]]:
    """Automorphisms of the tree above c, once as a partial algebra and
    once as an order, by independent permutation filters; returns the
    verdict with both lists (local indices into the ascending element
    list)."""
    P, elems = core.upper_set(A, c)
    k = len(elems)
    if k > bound:
        raise ValueError(f"bound exceeded: tree size {k} > {bound}")
    tab = P.table
    rng = range(k)

    alg = []
    for p in permutations(rng):
        ok = True
        for i in rng:
            v = tab[i]
            if v is None:
                if tab[p[i]] is not None:
                    ok = False
                    break
            elif tab[p[i]] != p[v]:
                ok = False
                break
        if ok:
            alg.append(p)

    pos = {e: i for i, e in enumerate(elems)}
    order = build_order(A, c)
    lset = {(pos[a], pos[b]) for (a, b) in order.leq}
    ord_auts = [
        p
        for p in permutations(rng)
        if all(((p[a], p[b]) in lset) == ((a, b) in lset) for a in rng for b in rng)
    ]
    return alg == ord_auts, tuple(alg), tuple(ord_auts)
