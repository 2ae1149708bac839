"""Independent reference implementations used only by the tests.

Everything here recomputes answers from definitions (bijection filters,
subset sweeps) and deliberately shares no code with the structured
algorithms it is used to check.
"""

from itertools import combinations, permutations

import hypothesis.strategies as st


def tables(max_n: int = 6):
    """Hypothesis strategy for raw total tables."""
    return st.integers(1, max_n).flatmap(
        lambda n: st.tuples(*[st.integers(0, n - 1)] * n)
    )


def iso_bijections(t1, t2):
    if len(t1) != len(t2):
        return []
    rng = range(len(t1))
    return [p for p in permutations(rng) if all(p[t1[x]] == t2[p[x]] for x in rng)]


def exists_iso(t1, t2) -> bool:
    return bool(iso_bijections(t1, t2))


def digraph_automorphisms(ptable):
    """Edge-preserving permutations of a partial table's digraph."""
    n = len(ptable)
    edges = {(x, v) for x, v in enumerate(ptable) if v is not None}
    out = []
    for p in permutations(range(n)):
        if all((p[x], p[y]) in edges for (x, y) in edges):
            out.append(p)
    return out


def digraph_uh(ptable) -> bool:
    """Homogeneity of a loop-free digraph: every isomorphism between
    induced subgraphs extends to an automorphism.  Definition replay over
    all subset pairs, with a vertex-transitivity early exit (singletons
    of a loop-free graph are always isomorphic)."""
    n = len(ptable)
    V = range(n)
    edges = {(x, v) for x, v in enumerate(ptable) if v is not None}
    auts = digraph_automorphisms(ptable)
    if len({p[0] for p in auts}) != n:
        return False
    sub_edges = {}

    def edges_in(S):
        if S not in sub_edges:
            inset = set(S)
            sub_edges[S] = {(x, y) for (x, y) in edges if x in inset and y in inset}
        return sub_edges[S]

    restr = {}

    def restrictions(S):
        if S not in restr:
            restr[S] = {tuple(p[x] for x in S) for p in auts}
        return restr[S]

    for k in range(2, n + 1):
        subs = list(combinations(V, k))
        for S in subs:
            ES = edges_in(S)
            avail = restrictions(S)
            for T in subs:
                ET = edges_in(T)
                if len(ES) != len(ET):
                    continue
                for perm in permutations(T):
                    m = dict(zip(S, perm))
                    if all((m[x], m[y]) in ET for (x, y) in ES):
                        if perm not in avail:
                            return False
    return True
