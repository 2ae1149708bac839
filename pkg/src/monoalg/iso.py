"""Isomorphism machinery: canonical certificates and automorphisms.

Certificates are exact nested-tuple canonical forms, not hashes: two
algebras have equal certificates iff they are isomorphic.  A tree above a
cyclic element is encoded bottom-up with sorted child encodings; a
component is its cycle length plus the lexicographically least rotation
of the per-cycle-element tree encodings; an algebra is the sorted
multiset of its component encodings.  Marked variants thread distinguished
element positions through the same scheme, which makes certificate
equality of marked algebras equivalent to the existence of an isomorphism
matching the marks.
"""

from __future__ import annotations

from itertools import permutations, product
from typing import Iterable, Iterator, Mapping, Optional, Sequence, Union

from .core import FiniteMonounary, generated

Certificate = tuple

DEFAULT_AUT_CAP = 100_000


# ---------------------------------------------------------------------------
# certificates

def _skeleton(table: Sequence[int]):
    """(cyclic mask, acyclic-children lists, parents-first sweep order)."""
    n = len(table)
    indeg = [0] * n
    for v in table:
        indeg[v] += 1
    stack = [x for x in range(n) if not indeg[x]]
    cyclic = [True] * n
    while stack:
        x = stack.pop()
        cyclic[x] = False
        y = table[x]
        indeg[y] -= 1
        if not indeg[y]:
            stack.append(y)
    kids: list[list[int]] = [[] for _ in range(n)]
    for x in range(n):
        if not cyclic[x]:
            kids[table[x]].append(x)
    sweep = [x for x in range(n) if cyclic[x]]
    i = 0
    while i < len(sweep):
        sweep.extend(kids[sweep[i]])
        i += 1
    return cyclic, kids, sweep


def _cycles(table: Sequence[int], cyclic: Sequence[bool]) -> list[list[int]]:
    seen = [False] * len(table)
    out = []
    for x in range(len(table)):
        if cyclic[x] and not seen[x]:
            cycle = []
            cur = x
            while not seen[cur]:
                seen[cur] = True
                cycle.append(cur)
                cur = table[cur]
            out.append(cycle)
    return out


def _min_rotation(seq: list) -> tuple:
    k = len(seq)
    return min(tuple(seq[i:] + seq[:i]) for i in range(k))


def table_certificate(table: Sequence[int]) -> Certificate:
    """Certificate straight from a raw table (hot path for enumeration)."""
    cyclic, kids, sweep = _skeleton(table)
    cert: list = [None] * len(table)
    for x in reversed(sweep):
        cs = [cert[k] for k in kids[x]]
        cs.sort()
        cert[x] = tuple(cs)
    comp_certs = [
        (len(cyc), _min_rotation([cert[c] for c in cyc]))
        for cyc in _cycles(table, cyclic)
    ]
    comp_certs.sort()
    return tuple(comp_certs)


def canonical_certificate(A: FiniteMonounary) -> Certificate:
    return table_certificate(A.table)


def marked_certificate(A: FiniteMonounary, xs: Sequence[int]) -> Certificate:
    """Certificate of A with the elements of `xs` marked by their positions.

    Equal marked certificates of (A, xs) and (B, ys) hold iff some
    isomorphism A -> B maps xs[i] to ys[i] for every i.
    """
    marks: dict[int, tuple[int, ...]] = {}
    for i, x in enumerate(xs):
        if not 0 <= x < A.n:
            raise ValueError(f"marked element out of range: {x}")
        marks[x] = marks.get(x, ()) + (i,)
    table = A.table
    cyclic, kids, sweep = _skeleton(table)
    cert: list = [None] * len(table)
    for x in reversed(sweep):
        cs = [cert[k] for k in kids[x]]
        cs.sort()
        cert[x] = (marks.get(x, ()), tuple(cs))
    comp_certs = [
        (len(cyc), _min_rotation([cert[c] for c in cyc]))
        for cyc in _cycles(table, cyclic)
    ]
    comp_certs.sort()
    return tuple(comp_certs)


def pointed_certificate(A: FiniteMonounary, x: int) -> Certificate:
    return marked_certificate(A, (x,))


def are_isomorphic(A: FiniteMonounary, B: FiniteMonounary) -> bool:
    return A.n == B.n and table_certificate(A.table) == table_certificate(B.table)


# ---------------------------------------------------------------------------
# automorphisms

def brute_force_automorphisms(A: FiniteMonounary, bound: int = 8) -> list[tuple[int, ...]]:
    """All automorphisms by filtering every permutation; oracle-grade only."""
    if A.n > bound:
        raise ValueError(f"bound exceeded: n={A.n} > {bound}")
    f = A.table
    rng = range(A.n)
    return [p for p in permutations(rng) if all(p[f[x]] == f[p[x]] for x in rng)]


def _tree_isos(x: int, y: int, cert: list, kids: list) -> list[dict[int, int]]:
    """All isomorphisms from the tree above x onto the tree above y."""
    if cert[x] != cert[y]:
        return []
    by_cert: dict = {}
    for k in kids[x]:
        by_cert.setdefault(cert[k], [[], []])[0].append(k)
    for k in kids[y]:
        by_cert.setdefault(cert[k], [[], []])[1].append(k)
    class_options: list[list[dict[int, int]]] = []
    for c in sorted(by_cert):
        xs_, ys_ = by_cert[c]
        opts: list[dict[int, int]] = []
        for target in permutations(ys_):
            subs = [_tree_isos(a, b, cert, kids) for a, b in zip(xs_, target)]
            for combo in product(*subs):
                merged: dict[int, int] = {}
                for d in combo:
                    merged.update(d)
                opts.append(merged)
        class_options.append(opts)
    out = []
    for combo in product(*class_options):
        m = {x: y}
        for d in combo:
            m.update(d)
        out.append(m)
    return out


def _tree_aut_counts(cert: list, kids: list, sweep: list) -> list[int]:
    cnt = [1] * len(cert)
    for x in reversed(sweep):
        by_cert: dict = {}
        total = 1
        for k in kids[x]:
            by_cert[cert[k]] = by_cert.get(cert[k], 0) + 1
            total *= cnt[k]
        for m in by_cert.values():
            for i in range(2, m + 1):
                total *= i
        cnt[x] = total
    return cnt


def enumerate_automorphisms(A: FiniteMonounary, cap: int = DEFAULT_AUT_CAP) -> list[tuple[int, ...]]:
    """All automorphisms, assembled componentwise: permute isomorphic
    components, rotate cycles compatibly, then map trees level by level.

    The count is computed first; if it exceeds `cap` the call fails
    instead of materializing.
    """
    table = A.table
    cyclic, kids, sweep = _skeleton(table)
    cert: list = [None] * len(table)
    for x in reversed(sweep):
        cs = [cert[k] for k in kids[x]]
        cs.sort()
        cert[x] = tuple(cs)
    cnt = _tree_aut_counts(cert, kids, sweep)
    cycles = _cycles(table, cyclic)
    comp_certs = [(len(cyc), _min_rotation([cert[c] for c in cyc])) for cyc in cycles]

    groups: dict = {}
    for i, cc in enumerate(comp_certs):
        groups.setdefault(cc, []).append(i)

    def valid_rotations(i: int, j: int) -> list[int]:
        seq_i = [cert[c] for c in cycles[i]]
        seq_j = [cert[c] for c in cycles[j]]
        k = len(seq_i)
        return [r for r in range(k) if all(seq_i[t] == seq_j[(r + t) % k] for t in range(k))]

    total = 1
    for members in groups.values():
        rep = members[0]
        per_comp = len(valid_rotations(rep, rep))
        for c in cycles[rep]:
            per_comp *= cnt[c]
        m = len(members)
        fact = 1
        for i in range(2, m + 1):
            fact *= i
        total *= fact * per_comp ** m
        if total > cap:
            raise ValueError(f"automorphism count {total}+ exceeds cap {cap}")

    def component_isos(i: int, j: int) -> list[dict[int, int]]:
        out = []
        k = len(cycles[i])
        for r in valid_rotations(i, j):
            pair_lists = [
                _tree_isos(cycles[i][t], cycles[j][(r + t) % k], cert, kids)
                for t in range(k)
            ]
            for combo in product(*pair_lists):
                m = {}
                for d in combo:
                    m.update(d)
                out.append(m)
        return out

    group_choices: list[list[dict[int, int]]] = []
    for members in sorted(groups.values()):
        assignments: list[dict[int, int]] = []
        for target in permutations(members):
            iso_lists = [component_isos(i, j) for i, j in zip(members, target)]
            for combo in product(*iso_lists):
                m = {}
                for d in combo:
                    m.update(d)
                assignments.append(m)
        group_choices.append(assignments)

    auts = []
    for combo in product(*group_choices):
        m = {}
        for d in combo:
            m.update(d)
        auts.append(tuple(m[x] for x in range(A.n)))
    auts.sort()
    return auts


def extend_to_automorphism(
    A: FiniteMonounary,
    mapping: Union[Mapping[int, int], Iterable[tuple[int, int]]],
    auts: Optional[Sequence[tuple[int, ...]]] = None,
    cap: int = DEFAULT_AUT_CAP,
) -> Optional[tuple[int, ...]]:
    """First automorphism agreeing with the partial map, or None."""
    pairs = mapping.items() if isinstance(mapping, Mapping) else mapping
    m: dict[int, int] = {}
    for k, v in pairs:
        if not (0 <= k < A.n and 0 <= v < A.n):
            raise ValueError(f"map entry out of range: {k} -> {v}")
        if k in m and m[k] != v:
            raise ValueError(f"conflicting images for {k}")
        m[k] = v
    if len(set(m.values())) != len(m):
        raise ValueError("map is not injective")
    if auts is None:
        auts = enumerate_automorphisms(A, cap=cap)
    for p in auts:
        if all(p[k] == v for k, v in m.items()):
            return p
    return None


# ---------------------------------------------------------------------------
# isomorphisms between generated subalgebras

def subalgebra_isomorphism_images(
    table: Sequence[int], src: Sequence[int], tgt: Sequence[int]
) -> Iterator[tuple[int, ...]]:
    """Images of the closed set `src` under all isomorphisms onto the
    closed set `tgt`, as tuples aligned with `src`."""
    pos = {x: i for i, x in enumerate(src)}
    for perm in permutations(tgt):
        ok = True
        for i, x in enumerate(src):
            if perm[pos[table[x]]] != table[perm[i]]:
                ok = False
                break
        if ok:
            yield perm


def isomorphisms_between(
    A: FiniteMonounary, S: Iterable[int], T: Iterable[int], bound: int = 8
) -> list[dict[int, int]]:
    """All isomorphisms from the subalgebra generated by S onto the one
    generated by T, as explicit maps."""
    src = tuple(sorted(generated(A, S)))
    tgt = tuple(sorted(generated(A, T)))
    if max(len(src), len(tgt)) > bound:
        raise ValueError(f"bound exceeded: subalgebra size > {bound}")
    if len(src) != len(tgt):
        return []
    return [dict(zip(src, images)) for images in subalgebra_isomorphism_images(A.table, src, tgt)]
