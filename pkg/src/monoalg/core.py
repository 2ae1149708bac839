"""Finite monounary algebras: one total unary operation on {0, ..., n-1}.

An algebra is stored as its value table (entry i is f(i)); the partial
variant allows None entries.  Induced substructures on a subset B keep f
on b exactly when f(b) lands inside B, so a subset of a total algebra is
in general only a partial algebra.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator, Sequence, Union


@dataclass(frozen=True)
class FiniteMonounary:
    """Total unary operation given as its value table."""

    table: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.table)
        if n == 0:
            raise ValueError("empty table")
        for i, v in enumerate(self.table):
            if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < n:
                raise ValueError(f"entry {i} out of range: {v!r}")

    @property
    def n(self) -> int:
        return len(self.table)

    def __call__(self, x: int) -> int:
        return self.table[x]


@dataclass(frozen=True)
class PartialMonounary:
    """Unary operation that may be undefined (None) on some elements."""

    table: tuple[Union[int, None], ...]

    def __post_init__(self) -> None:
        n = len(self.table)
        if n == 0:
            raise ValueError("empty table")
        for i, v in enumerate(self.table):
            if v is None:
                continue
            if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < n:
                raise ValueError(f"entry {i} out of range: {v!r}")

    @property
    def n(self) -> int:
        return len(self.table)

    def domain(self) -> tuple[int, ...]:
        return tuple(x for x, v in enumerate(self.table) if v is not None)


Algebra = Union[FiniteMonounary, PartialMonounary]


def validate(raw: Sequence[int]) -> FiniteMonounary:
    """Checked constructor from any integer sequence."""
    return FiniteMonounary(tuple(raw))


def validate_partial(raw: Sequence[Union[int, None]]) -> PartialMonounary:
    return PartialMonounary(tuple(raw))


# ---------------------------------------------------------------------------
# structural invariants

def cyclic_mask(A: FiniteMonounary) -> tuple[bool, ...]:
    """mask[x] is True iff some positive power of f fixes x.

    Peels indegree-0 elements; whatever survives lies on a cycle.
    """
    f, n = A.table, A.n
    indeg = [0] * n
    for v in f:
        indeg[v] += 1
    stack = [x for x in range(n) if indeg[x] == 0]
    acyclic = [False] * n
    while stack:
        x = stack.pop()
        acyclic[x] = True
        y = f[x]
        indeg[y] -= 1
        if indeg[y] == 0:
            stack.append(y)
    return tuple(not a for a in acyclic)


def acyclic_children(A: FiniteMonounary) -> tuple[tuple[int, ...], ...]:
    """Per element, its acyclic preimages in ascending order."""
    cyc = cyclic_mask(A)
    kids: list[list[int]] = [[] for _ in range(A.n)]
    for x in range(A.n):
        if not cyc[x]:
            kids[A.table[x]].append(x)
    return tuple(tuple(k) for k in kids)


def cycles_of(A: FiniteMonounary) -> tuple[tuple[int, ...], ...]:
    """All cycles, each listed in operation order starting at its least element."""
    cyc, f = cyclic_mask(A), A.table
    seen = [False] * A.n
    out = []
    for x in range(A.n):
        if cyc[x] and not seen[x]:
            cycle = []
            cur = x
            while not seen[cur]:
                seen[cur] = True
                cycle.append(cur)
                cur = f[cur]
            out.append(tuple(cycle))
    return tuple(out)


def heights(A: FiniteMonounary) -> tuple[int, ...]:
    """Least k with f^k(x) cyclic, per element."""
    kids = acyclic_children(A)
    cyc = cyclic_mask(A)
    h = [0] * A.n
    stack = [x for x in range(A.n) if cyc[x]]
    while stack:
        x = stack.pop()
        for k in kids[x]:
            h[k] = h[x] + 1
            stack.append(k)
    return tuple(h)


def components(A: FiniteMonounary) -> tuple[tuple[int, ...], ...]:
    """Connected components as sorted blocks, sorted by least element.

    Each component contains exactly one cycle; the block is that cycle
    plus everything whose forward orbit falls into it.
    """
    kids = acyclic_children(A)
    comps = []
    for cycle in cycles_of(A):
        block = list(cycle)
        i = 0
        while i < len(block):
            block.extend(kids[block[i]])
            i += 1
        comps.append(tuple(sorted(block)))
    return tuple(sorted(comps))


@dataclass(frozen=True)
class MinimalGenerators:
    """Minimal generating sets, in factored form.

    Every minimal generating set is `leaves` together with one element
    chosen from each block of `cycle_choices` (the purely cyclic
    components, which contain no leaf to reach them from).
    """

    leaves: frozenset[int]
    cycle_choices: tuple[frozenset[int], ...]

    def all_sets(self) -> Iterator[frozenset[int]]:
        for picks in product(*[sorted(c) for c in self.cycle_choices]):
            yield self.leaves | frozenset(picks)


@dataclass(frozen=True)
class StructureReport:
    components: tuple[tuple[int, ...], ...]
    cyclic: frozenset[int]
    heights: tuple[int, ...]
    height: int
    leaves: frozenset[int]
    cycle_sizes: tuple[int, ...]
    min_generating: MinimalGenerators


def structure_report(A: FiniteMonounary) -> StructureReport:
    comps = components(A)
    cyc = cyclic_mask(A)
    hts = heights(A)
    image = set(A.table)
    leaves = frozenset(x for x in range(A.n) if x not in image)
    cycle_sizes = tuple(sorted(len(c) for c in cycles_of(A)))
    purely_cyclic = tuple(
        frozenset(c) for c in comps if all(cyc[x] for x in c)
    )
    return StructureReport(
        components=comps,
        cyclic=frozenset(x for x in range(A.n) if cyc[x]),
        heights=hts,
        height=max(hts),
        leaves=leaves,
        cycle_sizes=cycle_sizes,
        min_generating=MinimalGenerators(leaves, purely_cyclic),
    )


# ---------------------------------------------------------------------------
# substructures

def generated(A: FiniteMonounary, seeds: Iterable[int]) -> frozenset[int]:
    """Subalgebra generated by `seeds`: closure under f."""
    out: set[int] = set()
    for s in seeds:
        if not 0 <= s < A.n:
            raise ValueError(f"generator out of range: {s}")
        x = s
        while x not in out:
            out.add(x)
            x = A.table[x]
    return frozenset(out)


def subalgebra(A: FiniteMonounary, elements: Iterable[int]) -> tuple[FiniteMonounary, tuple[int, ...]]:
    """Reindex a closed subset as a total algebra; returns it with the
    ascending element list mapping local index -> original element."""
    elems = tuple(sorted(set(elements)))
    idx = {x: i for i, x in enumerate(elems)}
    tab = []
    for x in elems:
        v = A.table[x]
        if v not in idx:
            raise ValueError(f"subset not closed: f({x}) = {v} escapes")
        tab.append(idx[v])
    return FiniteMonounary(tuple(tab)), elems


def partial_restrict(alg: Algebra, elements: Iterable[int]) -> tuple[PartialMonounary, tuple[int, ...]]:
    """Induced partial structure on an arbitrary subset."""
    elems = tuple(sorted(set(elements)))
    if not elems:
        raise ValueError("empty subset")
    idx = {x: i for i, x in enumerate(elems)}
    for x in elems:
        if not 0 <= x < alg.n:
            raise ValueError(f"element out of range: {x}")
    tab = tuple(
        idx[alg.table[x]] if alg.table[x] is not None and alg.table[x] in idx else None
        for x in elems
    )
    return PartialMonounary(tab), elems


def upper_set(A: FiniteMonounary, z: int) -> tuple[PartialMonounary, tuple[int, ...]]:
    """The tree hanging above z: z plus every acyclic element whose forward
    orbit reaches z without first touching a cycle.  Restriction is partial
    (the image of z itself usually escapes)."""
    if not 0 <= z < A.n:
        raise ValueError(f"element out of range: {z}")
    kids = acyclic_children(A)
    block = [z]
    i = 0
    while i < len(block):
        block.extend(kids[block[i]])
        i += 1
    return partial_restrict(A, block)


# ---------------------------------------------------------------------------
# io

def relational_form(alg: Algebra) -> tuple[tuple[int, int], ...]:
    """Edge list of the associated digraph: x -> f(x) where defined."""
    return tuple((x, v) for x, v in enumerate(alg.table) if v is not None)


def to_json(alg: Algebra) -> str:
    return json.dumps({"n": alg.n, "f": list(alg.table)})


def from_json(text: str) -> Algebra:
    data = json.loads(text)
    if not isinstance(data, dict) or "n" not in data or "f" not in data:
        raise ValueError("expected an object with keys 'n' and 'f'")
    f = data["f"]
    if not isinstance(f, list) or data["n"] != len(f):
        raise ValueError("'n' does not match the table length")
    if any(v is None for v in f):
        return PartialMonounary(tuple(f))
    return FiniteMonounary(tuple(f))


def to_text(alg: Algebra) -> str:
    return "f: " + " ".join("-" if v is None else str(v) for v in alg.table)


def from_text(line: str) -> Algebra:
    body = line.strip()
    if body.startswith("f:"):
        body = body[2:]
    parts = body.split()
    if not parts:
        raise ValueError("empty table")
    tab = tuple(None if p == "-" else int(p) for p in parts)
    if any(v is None for v in tab):
        return PartialMonounary(tab)
    return FiniteMonounary(tab)


def to_dot(alg: Algebra, name: str = "monounary") -> str:
    lines = [f"digraph {name} {{"]
    for x in range(alg.n):
        lines.append(f"  {x};")
    for x, y in relational_form(alg):
        lines.append(f"  {x} -> {y};")
    lines.append("}")
    return "\n".join(lines)
