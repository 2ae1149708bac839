"""Symbolic calculus for algebras given by shape rather than by table.

A descriptor is one of
  A[n; a0, a1, ...]   a cycle of length n whose trees are uniform level by
                      level: every cyclic element has a0 children outside
                      the cycle, every height-k element has a_k children.
                      An optional tail card repeats forever (infinite
                      height); trailing prefix entries equal to the tail
                      are stripped.  Zn abbreviates the bare cycle A[n].
  B[a]                connected, acyclic, every element with exactly a
                      preimages and a-branching all the way down (a >= 1,
                      usually w); every element has infinite height.
  N                   the successor chain on the naturals.
Cardinals come from {0, 1, 2, ...} with a top element w; arithmetic
saturates at w.  A symbolic algebra is a cardinal-weighted sum of
descriptors, normalized by merging isomorphic descriptors and sorting.
Limit families (one profile per cycle length, over all lengths at once)
represent the age-limits of the finite, and the k-bounded-branching,
algebras; they print but do not parse.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Optional, Union

from . import core
from .core import FiniteMonounary


# ---------------------------------------------------------------------------
# cardinals

@dataclass(frozen=True)
class Cardinal:
    """Natural number or the top value w (encoded as None)."""

    value: Optional[int]

    def __post_init__(self) -> None:
        if self.value is not None and (not isinstance(self.value, int) or self.value < 0):
            raise ValueError(f"bad cardinal: {self.value!r}")

    @property
    def is_omega(self) -> bool:
        return self.value is None

    def as_int(self) -> int:
        if self.value is None:
            raise ValueError("w is not an integer")
        return self.value

    def key(self) -> tuple[int, int]:
        return (1, 0) if self.value is None else (0, self.value)

    def __le__(self, other: "Cardinal") -> bool:
        return self.key() <= other.key()

    def __lt__(self, other: "Cardinal") -> bool:
        return self.key() < other.key()

    def __add__(self, other: "Cardinal") -> "Cardinal":
        if self.is_omega or other.is_omega:
            return OMEGA
        return Cardinal(self.value + other.value)

    def __mul__(self, other: "Cardinal") -> "Cardinal":
        if (self.value == 0) or (other.value == 0):
            return Cardinal(0)
        if self.is_omega or other.is_omega:
            return OMEGA
        return Cardinal(self.value * other.value)

    def __str__(self) -> str:
        return "w" if self.value is None else str(self.value)


OMEGA = Cardinal(None)
ONE = Cardinal(1)


def card(x: Union[int, str, Cardinal]) -> Cardinal:
    if isinstance(x, Cardinal):
        return x
    if isinstance(x, str):
        if x == "w":
            return OMEGA
        return Cardinal(int(x))
    return Cardinal(x)


# ---------------------------------------------------------------------------
# descriptors

@dataclass(frozen=True)
class Profile:
    """Cycle of length `cycle` with level-uniform trees; see module doc."""

    cycle: int
    prefix: tuple[Cardinal, ...] = ()
    tail: Optional[Cardinal] = None

    def __post_init__(self) -> None:
        if self.cycle < 1:
            raise ValueError("cycle length must be positive")
        prefix = tuple(card(e) for e in self.prefix)
        tail = card(self.tail) if self.tail is not None else None
        zero = Cardinal(0)
        if any(e == zero for e in prefix) or tail == zero:
            raise ValueError("level cardinals must be nonzero")
        if tail is not None:
            while prefix and prefix[-1] == tail:
                prefix = prefix[:-1]
        object.__setattr__(self, "prefix", prefix)
        object.__setattr__(self, "tail", tail)

    @property
    def height(self) -> Optional[int]:
        """Height of the component; None when a tail makes it infinite."""
        return None if self.tail is not None else len(self.prefix)

    def levels(self, h: int) -> tuple[Cardinal, ...]:
        """First h level cardinals, expanding the tail as needed."""
        out = list(self.prefix[:h])
        while len(out) < h and self.tail is not None:
            out.append(self.tail)
        return tuple(out)


@dataclass(frozen=True)
class Bee:
    alpha: Cardinal

    def __post_init__(self) -> None:
        a = card(self.alpha)
        if a == Cardinal(0):
            raise ValueError("branching cardinal must be nonzero")
        object.__setattr__(self, "alpha", a)


@dataclass(frozen=True)
class NSucc:
    pass


NSUCC = NSucc()

Descriptor = Union[Profile, Bee, NSucc]


def _desc_key(d: Descriptor):
    if isinstance(d, Profile):
        tail_key = (0, 0) if d.tail is None else d.tail.key()
        return (0, d.cycle, 0 if d.tail is None else 1, tuple(e.key() for e in d.prefix), tail_key)
    if isinstance(d, Bee):
        return (1, d.alpha.key(), 0, (), (0, 0))
    return (2, 0, 0, (), (0, 0))


def descriptors_isomorphic(d1: Descriptor, d2: Descriptor) -> bool:
    """Constructors normalize, so isomorphism is plain equality."""
    return d1 == d2


@dataclass(frozen=True)
class CycleFamily:
    """One profile shape per cycle length, over every length at once."""

    multiplicity: Cardinal
    prefix: tuple[Cardinal, ...]
    tail: Optional[Cardinal]

    def member(self, n: int) -> Profile:
        return Profile(n, self.prefix, self.tail)

    def __str__(self) -> str:
        body = show_descriptor(Profile(1, self.prefix, self.tail))
        body = body.replace("A[1", "A[n", 1) if body.startswith("A[1") else "A[n]"
        return f"sum_(n>=1) {self.multiplicity}*{body}"


@dataclass(frozen=True)
class SymbolicAlgebra:
    components: tuple[tuple[Cardinal, Descriptor], ...]
    families: tuple[CycleFamily, ...] = ()

    def __str__(self) -> str:
        return show(self)


def symbolic(
    components: Iterable[tuple[Union[int, str, Cardinal], Descriptor]],
    families: Iterable[CycleFamily] = (),
) -> SymbolicAlgebra:
    """Checked, normalizing constructor: multiplicities coerced and
    nonzero, isomorphic descriptors merged, deterministic order."""
    merged: dict = {}
    order: list[Descriptor] = []
    for mult, desc in components:
        m = card(mult)
        if m == Cardinal(0):
            raise ValueError("zero multiplicity")
        if desc in merged:
            merged[desc] = merged[desc] + m
        else:
            merged[desc] = m
            order.append(desc)
    fams = tuple(families)
    if not merged and not fams:
        raise ValueError("empty sum")
    comps = tuple(
        (merged[d], d) for d in sorted(order, key=_desc_key)
    )
    return SymbolicAlgebra(comps, fams)


# ---------------------------------------------------------------------------
# concrete syntax

def show_descriptor(d: Descriptor) -> str:
    if isinstance(d, Profile):
        if not d.prefix and d.tail is None:
            return f"Z{d.cycle}"
        body = f"A[{d.cycle};" + ",".join(str(e) for e in d.prefix)
        if d.tail is not None:
            body += f";{d.tail}"
        return body + "]"
    if isinstance(d, Bee):
        return f"B[{d.alpha}]"
    return "N"


def show(S: SymbolicAlgebra) -> str:
    parts = []
    for mult, desc in S.components:
        ds = show_descriptor(desc)
        parts.append(ds if mult == ONE else f"{mult}*{ds}")
    parts.extend(str(f) for f in S.families)
    return " + ".join(parts)


_TOKEN = re.compile(r"\s*(\d+|[wZNAB\[\];,+*])")


class _Parser:
    def __init__(self, text: str):
        self.tokens: list[str] = []
        pos = 0
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if m is None:
                if text[pos:].strip():
                    raise ValueError(f"bad token at: {text[pos:]!r}")
                break
            self.tokens.append(m.group(1))
            pos = m.end()
        self.i = 0

    def peek(self) -> Optional[str]:
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def take(self, expect: Optional[str] = None) -> str:
        tok = self.peek()
        if tok is None or (expect is not None and tok != expect):
            raise ValueError(f"expected {expect or 'more input'}, got {tok!r}")
        self.i += 1
        return tok

    def card(self) -> Cardinal:
        tok = self.take()
        if tok == "w":
            return OMEGA
        if tok.isdigit():
            return Cardinal(int(tok))
        raise ValueError(f"expected a cardinal, got {tok!r}")

    def cardlist(self) -> tuple[Cardinal, ...]:
        out = []
        if self.peek() in (";", "]"):
            return ()
        out.append(self.card())
        while self.peek() == ",":
            self.take(",")
            out.append(self.card())
        return tuple(out)

    def descriptor(self) -> Descriptor:
        tok = self.take()
        if tok == "N":
            return NSUCC
        if tok == "Z":
            return Profile(int(self.take()))
        if tok == "B":
            self.take("[")
            a = self.card()
            self.take("]")
            return Bee(a)
        if tok == "A":
            self.take("[")
            cycle = int(self.take())
            prefix: tuple[Cardinal, ...] = ()
            tail: Optional[Cardinal] = None
            if self.peek() == ";":
                self.take(";")
                prefix = self.cardlist()
                if self.peek() == ";":
                    self.take(";")
                    tail = self.card()
            self.take("]")
            return Profile(cycle, prefix, tail)
        raise ValueError(f"expected a descriptor, got {tok!r}")

    def term(self) -> tuple[Cardinal, Descriptor]:
        tok = self.peek()
        if tok is not None and (tok.isdigit() or tok == "w"):
            save = self.i
            mult = self.card()
            if self.peek() == "*":
                self.take("*")
                return mult, self.descriptor()
            self.i = save
        return ONE, self.descriptor()

    def sum(self) -> SymbolicAlgebra:
        comps = [self.term()]
        while self.peek() == "+":
            self.take("+")
            comps.append(self.term())
        if self.peek() is not None:
            raise ValueError(f"trailing input: {self.peek()!r}")
        return symbolic(comps)


def parse(text: str) -> SymbolicAlgebra:
    return _Parser(text).sum()


# ---------------------------------------------------------------------------
# deciders

def is_locally_finite(S: SymbolicAlgebra) -> bool:
    """Every element generates a finite subalgebra, i.e. every element has
    finite height; rules out exactly B[a] and N components."""
    return all(isinstance(d, Profile) for _, d in S.components)


def is_ulf(S: SymbolicAlgebra) -> bool:
    """Uniformly locally finite: bounded height and finitely many cycle
    sizes.  Tails break the bound; families carry all cycle sizes."""
    return (
        is_locally_finite(S)
        and not S.families
        and all(d.tail is None for _, d in S.components)
    )


def o1(S: SymbolicAlgebra) -> Cardinal:
    """Number of 1-orbits.  Isomorphic components share orbits, so each
    distinct descriptor contributes independently: height+1 for tail-free
    profiles, 1 for B[a], w for tailed profiles and N."""
    if S.families:
        return OMEGA
    total = Cardinal(0)
    for _, d in S.components:
        if isinstance(d, Profile):
            total = total + (OMEGA if d.tail is not None else Cardinal(len(d.prefix) + 1))
        elif isinstance(d, Bee):
            total = total + ONE
        else:
            total = total + OMEGA
    return total


def is_omega_categorical(S: SymbolicAlgebra) -> bool:
    return is_locally_finite(S) and not o1(S).is_omega


def _family_shapes_consistent(S: SymbolicAlgebra) -> bool:
    shapes = {(f.prefix, f.tail) for f in S.families}
    if len(shapes) > 1:
        return False
    if S.families:
        fam = S.families[0]
        for _, d in S.components:
            if isinstance(d, Profile) and d != fam.member(d.cycle):
                return False
    return True


def is_ultrahomogeneous(S: SymbolicAlgebra) -> bool:
    """All acyclic components are one common B[a], and components with
    equal cycle size are isomorphic."""
    if any(isinstance(d, NSucc) for _, d in S.components):
        return False
    if sum(1 for _, d in S.components if isinstance(d, Bee)) > 1:
        return False
    cycles = [d.cycle for _, d in S.components if isinstance(d, Profile)]
    if len(cycles) != len(set(cycles)):
        return False
    if S.families and cycles:
        pass  # concrete profiles must then match the family shape, below
    return _family_shapes_consistent(S)


def is_homogeneous(S: SymbolicAlgebra) -> bool:
    """The infinite-height part is unconstrained; only the cyclic part
    must be ultrahomogeneous."""
    cyclic_part = [(m, d) for m, d in S.components if isinstance(d, Profile)]
    if not cyclic_part and not S.families:
        return True
    return is_ultrahomogeneous(SymbolicAlgebra(tuple(cyclic_part), S.families))


def is_transitive(S: SymbolicAlgebra) -> bool:
    if S.families or len(S.components) != 1:
        return False
    d = S.components[0][1]
    if isinstance(d, Bee):
        return True
    return isinstance(d, Profile) and not d.prefix and d.tail is None


def is_partially_homogeneous(S: SymbolicAlgebra) -> bool:
    """Same five shapes as the finite decider, with cardinals up to w."""
    if S.families:
        return False
    descs = [(m, d) for m, d in S.components]
    if any(not isinstance(d, Profile) for _, d in descs):
        return False

    def bare(d: Profile, k: int) -> bool:
        return d.cycle == k and not d.prefix and d.tail is None

    ds = [d for _, d in descs]
    if all(bare(d, 1) or bare(d, 2) for d in ds):
        return True
    if all(bare(d, 1) or bare(d, 3) for d in ds):
        return True
    fours = [(m, d) for m, d in descs if bare(d, 4)]
    if fours and all(bare(d, 1) or bare(d, 4) for d in ds):
        if len(fours) == 1 and fours[0][0] == ONE:
            return True
    if len(ds) == 1 and ds[0].tail is None and ds[0].cycle == 1 and len(ds[0].prefix) == 1:
        if ds[0].prefix[0] == ONE:
            return True  # any number of copies of a looped point with one leaf
        return descs[0][0] == ONE  # a single looped point with any branching
    return False


# ---------------------------------------------------------------------------
# limits, instantiation, decomposition

def fraisse_limit(k: Optional[int] = None) -> SymbolicAlgebra:
    """Age-limit families: all finite algebras (k None), or those with
    every indegree at most k.  For k = 1 the shape A[n; 0, 1, 1, ...] has
    an empty level, which the notation cannot carry, so the family is
    presented as the bare cycles it consists of."""
    if k is None:
        fam = CycleFamily(OMEGA, (), OMEGA)
    elif k == 1:
        fam = CycleFamily(OMEGA, (), None)
    elif k >= 2:
        fam = CycleFamily(OMEGA, (card(k - 1),), card(k))
    else:
        raise ValueError("k must be at least 1")
    return SymbolicAlgebra((), (fam,))


def instantiate(S: SymbolicAlgebra, omega_value: int) -> FiniteMonounary:
    """Build an explicit table with w replaced by `omega_value`."""
    if omega_value < 1:
        raise ValueError("omega_value must be positive")
    if S.families:
        raise ValueError("a limit family has no finite instance")

    def resolve(c: Cardinal) -> int:
        return omega_value if c.is_omega else c.as_int()

    table: list[int] = []
    for mult, desc in S.components:
        if not isinstance(desc, Profile) or desc.tail is not None:
            raise ValueError(f"{show_descriptor(desc)} has no finite instance")
        for _ in range(resolve(mult)):
            base = len(table)
            k = desc.cycle
            for i in range(k):
                table.append(base + (i + 1) % k)
            level = list(range(base, base + k))
            for a in desc.prefix:
                branches = resolve(a)
                nxt = []
                for parent in level:
                    for _ in range(branches):
                        table.append(parent)
                        nxt.append(len(table) - 1)
                level = nxt
    return FiniteMonounary(tuple(table))


def truncate(S: SymbolicAlgebra, h: int, max_cycle: Optional[int] = None) -> SymbolicAlgebra:
    """Cut every component to height at most h (tails expand into
    prefixes).  Families materialize into one profile per cycle length up
    to `max_cycle`, which is then required."""
    if h < 0:
        raise ValueError("height must be nonnegative")
    comps: list[tuple[Cardinal, Descriptor]] = []
    for mult, desc in S.components:
        if not isinstance(desc, Profile):
            raise ValueError(f"{show_descriptor(desc)} has unbounded elements; cannot truncate")
        comps.append((mult, Profile(desc.cycle, desc.levels(h), None)))
    if S.families:
        if max_cycle is None:
            raise ValueError("limit family requires max_cycle to truncate")
        for fam in S.families:
            shape = Profile(1, fam.prefix, fam.tail)
            for n in range(1, max_cycle + 1):
                comps.append((fam.multiplicity, Profile(n, shape.levels(h), None)))
    return symbolic(comps)


class NotUltrahomogeneous(ValueError):
    pass


def decompose(A: FiniteMonounary) -> SymbolicAlgebra:
    """Symbolic normal form of an ultrahomogeneous finite algebra."""
    hts = core.heights(A)
    cyc = core.cyclic_mask(A)
    kids = core.acyclic_children(A)
    by_cycle: dict[int, Profile] = {}
    entries = []
    for comp in core.components(A):
        csize = sum(1 for x in comp if cyc[x])
        top = max(hts[x] for x in comp)
        levels = []
        for k in range(top):
            counts = {len(kids[x]) for x in comp if hts[x] == k}
            if len(counts) != 1:
                raise NotUltrahomogeneous(
                    f"not ultrahomogeneous: level {k} has non-uniform preimage counts {sorted(counts)}"
                )
            levels.append(Cardinal(counts.pop()))
        profile = Profile(csize, tuple(levels))
        if by_cycle.setdefault(csize, profile) != profile:
            raise NotUltrahomogeneous(
                f"not ultrahomogeneous: components with cycle size {csize} are not isomorphic"
            )
        entries.append((ONE, profile))
    return symbolic(entries)
