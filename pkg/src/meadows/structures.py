"""Finite structures over the meadow signature, given by operation tables.

The carrier is always {0, ..., n-1}; names for elements belong to file
formats and front ends, not to the tables.  Structures are immutable after
construction and all checkers are pure, so everything here can be shared
freely between threads.

Equation checking is exhaustive.  Small assignment spaces run through the
plain recursive evaluator; large ones are evaluated in bulk with numpy over
index arrays, which keeps full exhaustion over carriers of a couple hundred
elements well inside interactive budgets.  Both routes return the
lexicographically least falsifying assignment (variables in sorted order),
so results are deterministic and the two routes can be cross-checked
against each other.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import (
    FormatError, MissingInverseTable, NoFiniteCharacteristic, NotAMeadow,
    SearchBoundExceeded, SizeOverflow, UnboundVariable,
)
from .logic import CR, MD, ZIL, GIL, SEP, Atom, ConditionalEquation, Equation
from .terms import Add, Inv, Mul, Neg, One, Term, Var, Zero, term_size

__all__ = [
    "Assignment", "Verdict", "FiniteStructure", "Homomorphism",
    "PrincipalIdeal",
    "eval_term", "check_equation", "check_conditional", "check_axiom_set",
    "is_meadow", "is_nontrivial", "is_zt_field", "satisfies_iel",
    "characteristic", "product", "product_index", "product_coords",
    "subalgebra_generated", "is_minimal", "generating_set",
    "find_homomorphisms", "idempotents", "unit_of", "principal_ideal",
    "dump_structure", "load_structure",
]

Assignment = dict[str, int]

# Assignment counts at or above this run through the numpy bulk evaluator;
# below it, bulk still wins once assignments x term size gets large.
_BULK_THRESHOLD = 4096
_BULK_COST = 100_000
# Bulk arrays above this many cells are chunked over the first variable.
_BULK_MAX_CELLS = 200_000_000


@dataclass(frozen=True)
class Verdict:
    """Outcome of an exhaustive check; witness is a falsifying assignment."""

    holds: bool
    witness: Assignment | None = None

    def __bool__(self) -> bool:
        return self.holds


def _as_row(row: Iterable[int]) -> tuple[int, ...]:
    return tuple(int(v) for v in row)


def _as_table(table: Iterable[Iterable[int]]) -> tuple[tuple[int, ...], ...]:
    return tuple(_as_row(row) for row in table)


@dataclass(frozen=True)
class FiniteStructure:
    """Operation tables for {0, 1, +, -, *} and optionally ^-1.

    ``add[r][c]`` holds r+c and ``mul[r][c]`` holds r*c.  ``inv`` is absent
    for raw rings that have not (or cannot) be expanded with an inverse.
    ``zero == one`` is allowed: the one-element structure is a meadow, just
    not a non-trivial one.
    """

    name: str
    size: int
    zero: int
    one: int
    add: tuple[tuple[int, ...], ...]
    mul: tuple[tuple[int, ...], ...]
    neg: tuple[int, ...]
    inv: tuple[int, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "add", _as_table(self.add))
        object.__setattr__(self, "mul", _as_table(self.mul))
        object.__setattr__(self, "neg", _as_row(self.neg))
        if self.inv is not None:
            object.__setattr__(self, "inv", _as_row(self.inv))
        n = self.size
        if n < 1:
            raise ValueError("carrier must be non-empty")
        if not (0 <= self.zero < n and 0 <= self.one < n):
            raise ValueError("constants outside carrier")
        for label, table in (("add", self.add), ("mul", self.mul)):
            if len(table) != n or any(len(row) != n for row in table):
                raise ValueError(f"{label} table is not {n}x{n}")
            if any(not 0 <= v < n for row in table for v in row):
                raise ValueError(f"{label} table entry outside carrier")
        for label, row in (("neg", self.neg), ("inv", self.inv)):
            if row is None:
                continue
            if len(row) != n or any(not 0 <= v < n for v in row):
                raise ValueError(f"{label} row is not a map on the carrier")

    @property
    def has_inv(self) -> bool:
        return self.inv is not None

    def __repr__(self) -> str:
        return f"FiniteStructure({self.name!r}, size={self.size})"


def _arrays(s: FiniteStructure):
    # Lazily cached numpy views of the tables, for the bulk evaluator.
    cached = getattr(s, "_np_cache", None)
    if cached is None:
        cached = (
            np.asarray(s.add, dtype=np.int32),
            np.asarray(s.mul, dtype=np.int32),
            np.asarray(s.neg, dtype=np.int32),
            None if s.inv is None else np.asarray(s.inv, dtype=np.int32),
        )
        object.__setattr__(s, "_np_cache", cached)
    return cached


# --- evaluation ----------------------------------------------------------

def eval_term(t: Term, s: FiniteStructure, assignment: Mapping[str, int] | None = None) -> int:
    """Evaluate a term to an element index, by structural recursion."""
    a = assignment or {}

    def rec(node: Term) -> int:
        match node:
            case Zero():
                return s.zero
            case One():
                return s.one
            case Var(name):
                try:
                    v = a[name]
                except KeyError:
                    raise UnboundVariable(name) from None
                if not 0 <= v < s.size:
                    raise ValueError(f"assignment {name}={v} outside carrier")
                return v
            case Neg(arg):
                return s.neg[rec(arg)]
            case Inv(arg):
                if s.inv is None:
                    raise MissingInverseTable(
                        f"{s.name} has no inverse table but the term uses ^-1"
                    )
                return s.inv[rec(arg)]
            case Add(l, r):
                return s.add[rec(l)][rec(r)]
            case Mul(l, r):
                return s.mul[rec(l)][rec(r)]
            case _:  # pragma: no cover
                raise TypeError(f"not a term: {node!r}")

    return rec(t)


def _bulk_eval(t, s, axes, scalars, memo):
    # Evaluate over the whole assignment grid at once.  Each variable gets
    # its own broadcast axis (in `axes` order), already-fixed variables come
    # in through `scalars`.  memo is keyed by node identity; the encoding
    # helpers share subterm objects, so this collapses their duplication.
    add, mul, neg, inv = _arrays(s)

    def rec(node):
        key = id(node)
        hit = memo.get(key)
        if hit is not None:
            return hit[1]
        match node:
            case Zero():
                arr = np.int32(s.zero)
            case One():
                arr = np.int32(s.one)
            case Var(name):
                if name in scalars:
                    arr = np.int32(scalars[name])
                else:
                    k = axes.index(name)
                    shape = [1] * len(axes)
                    shape[k] = s.size
                    arr = np.arange(s.size, dtype=np.int32).reshape(shape)
            case Neg(arg):
                arr = neg[rec(arg)]
            case Inv(arg):
                if inv is None:
                    raise MissingInverseTable(
                        f"{s.name} has no inverse table but the term uses ^-1"
                    )
                arr = inv[rec(arg)]
            case Add(l, r):
                arr = add[rec(l), rec(r)]
            case Mul(l, r):
                arr = mul[rec(l), rec(r)]
            case _:  # pragma: no cover
                raise TypeError(f"not a term: {node!r}")
        memo[key] = (node, arr)
        return arr

    return rec(t)


def _atom_holds_scalar(atom: Atom, s, a) -> bool:
    same = eval_term(atom.lhs, s, a) == eval_term(atom.rhs, s, a)
    return same if isinstance(atom, Equation) else not same


def _find_falsifier(s, premises, conclusion, variables, scalars):
    """Least assignment satisfying all premises but not the conclusion.

    Returns None when no such assignment exists.  `variables` is the sorted
    variable list fixing the lexicographic order; `scalars` pins a prefix of
    them (used when chunking large grids).
    """
    free = [v for v in variables if v not in scalars]
    total = s.size ** len(free)
    nodes = sum(
        term_size(atom.lhs) + term_size(atom.rhs)
        for atom in (*premises, conclusion)
    )

    if not free or (total < _BULK_THRESHOLD and total * nodes < _BULK_COST):
        for values in itertools.product(range(s.size), repeat=len(free)):
            a = dict(scalars)
            a.update(zip(free, values))
            if all(_atom_holds_scalar(p, s, a) for p in premises):
                if not _atom_holds_scalar(conclusion, s, a):
                    return {v: a[v] for v in variables}
        return None

    if total > _BULK_MAX_CELLS:
        head = free[0]
        for value in range(s.size):
            inner = dict(scalars)
            inner[head] = value
            found = _find_falsifier(s, premises, conclusion, variables, inner)
            if found is not None:
                return found
        return None

    memo: dict = {}
    shape = (s.size,) * len(free)

    def atom_mask(atom):
        lhs = _bulk_eval(atom.lhs, s, free, scalars, memo)
        rhs = _bulk_eval(atom.rhs, s, free, scalars, memo)
        same = lhs == rhs
        return same if isinstance(atom, Equation) else ~same

    bad = ~atom_mask(conclusion)
    for p in premises:
        if not bad.any():
            return None
        bad = bad & atom_mask(p)
    if not bad.any():
        return None
    bad = np.broadcast_to(bad, shape)
    first = np.argwhere(bad)[0]
    out = dict(scalars)
    out.update({v: int(i) for v, i in zip(free, first)})
    return {v: out[v] for v in variables}


def check_equation(s: FiniteStructure, eq: Equation) -> Verdict:
    """Decide whether lhs = rhs holds under every assignment, by exhaustion."""
    variables = sorted(eq.variables())
    witness = _find_falsifier(s, (), eq, variables, {})
    return Verdict(witness is None, witness)


def check_conditional(s: FiniteStructure, ce: ConditionalEquation) -> Verdict:
    """Decide a conditional: every assignment satisfying the premises must
    satisfy the conclusion.  Premises and conclusion may be disequations."""
    variables = sorted(ce.variables())
    witness = _find_falsifier(s, ce.premises, ce.conclusion, variables, {})
    return Verdict(witness is None, witness)


def check_axiom_set(
    s: FiniteStructure, axioms: Mapping[str, Equation]
) -> dict[str, Verdict]:
    """Run check_equation per named axiom; preserves the set's order."""
    return {name: check_equation(s, eq) for name, eq in axioms.items()}


def is_meadow(s: FiniteStructure) -> bool:
    """True when the structure carries an inverse and satisfies all ten meadow laws."""
    if s.inv is None:
        return False
    return all(v.holds for v in check_axiom_set(s, MD).values())


def is_nontrivial(s: FiniteStructure) -> bool:
    """The separation axiom 0 != 1."""
    return s.zero != s.one


def is_zt_field(s: FiniteStructure) -> bool:
    """Zero-totalized field: ring laws, guarded inverse law, separation, 0^-1=0."""
    if s.inv is None:
        return False
    if not all(v.holds for v in check_axiom_set(s, CR).values()):
        return False
    if not check_equation(s, ZIL["Zil"]).holds:
        return False
    return check_conditional(s, GIL).holds and check_conditional(s, SEP).holds


def satisfies_iel(s: FiniteStructure) -> bool:
    """Inverse existence: every nonzero x has some y with x*y = 1.

    The law has an existential conclusion, so it is checked by scan rather
    than as a conditional equation.
    """
    return all(
        any(s.mul[x][y] == s.one for y in range(s.size))
        for x in range(s.size)
        if x != s.zero
    )


# --- structural operations ------------------------------------------------

def characteristic(s: FiniteStructure) -> int:
    """Least k > 0 whose numeral evaluates to 0."""
    acc = s.zero
    seen = set()
    for k in range(1, s.size + 2):
        acc = s.add[acc][s.one]
        if acc == s.zero:
            return k
        if acc in seen:
            raise NoFiniteCharacteristic(
                f"sums of 1 cycle without reaching 0 in {s.name}"
            )
        seen.add(acc)
    raise NoFiniteCharacteristic(f"corrupt add table in {s.name}")  # pragma: no cover


def product_index(coords: Sequence[int], sizes: Sequence[int]) -> int:
    """Mixed-radix, little-endian: the first coordinate varies fastest."""
    idx = 0
    scale = 1
    for c, n in zip(coords, sizes):
        idx += c * scale
        scale *= n
    return idx


def product_coords(idx: int, sizes: Sequence[int]) -> tuple[int, ...]:
    coords = []
    for n in sizes:
        coords.append(idx % n)
        idx //= n
    return tuple(coords)


def product(
    factors: Sequence[FiniteStructure],
    name: str | None = None,
    carrier_bound: int = 10**6,
) -> FiniteStructure:
    """Componentwise product; carries an inverse iff every factor does."""
    if not factors:
        raise ValueError("product of no factors")
    sizes = [f.size for f in factors]
    size = 1
    for n in sizes:
        size *= n
        if size > carrier_bound:
            raise SizeOverflow(
                f"product carrier exceeds bound {carrier_bound}"
            )
    coords = [product_coords(i, sizes) for i in range(size)]
    with_inv = all(f.inv is not None for f in factors)

    def binary(tables):
        return tuple(
            tuple(
                product_index(
                    [t[a[k]][b[k]] for k, t in enumerate(tables)], sizes
                )
                for b in coords
            )
            for a in coords
        )

    def unary(rows):
        return tuple(
            product_index([r[a[k]] for k, r in enumerate(rows)], sizes)
            for a in coords
        )

    return FiniteStructure(
        name=name or "(" + " x ".join(f.name for f in factors) + ")",
        size=size,
        zero=product_index([f.zero for f in factors], sizes),
        one=product_index([f.one for f in factors], sizes),
        add=binary([f.add for f in factors]),
        mul=binary([f.mul for f in factors]),
        neg=unary([f.neg for f in factors]),
        inv=unary([f.inv for f in factors]) if with_inv else None,
    )


def _closure(s: FiniteStructure, seeds: Iterable[int]) -> set[int]:
    current = {s.zero, s.one} | set(seeds)
    queue = list(current)
    qi = 0
    while qi < len(queue):
        a = queue[qi]
        qi += 1

        def visit(v):
            if v not in current:
                current.add(v)
                queue.append(v)

        visit(s.neg[a])
        if s.inv is not None:
            visit(s.inv[a])
        for b in queue[:qi]:
            visit(s.add[a][b])
            visit(s.add[b][a])
            visit(s.mul[a][b])
            visit(s.mul[b][a])
    return current


def subalgebra_generated(
    s: FiniteStructure, seeds: Iterable[int] = ()
) -> tuple[FiniteStructure, "Homomorphism"]:
    """Least substructure containing {0, 1} and the seeds, closed under all
    operations.  Returns the re-indexed structure and its inclusion map."""
    seeds = sorted(set(seeds))
    for e in seeds:
        if not 0 <= e < s.size:
            raise ValueError(f"seed {e} outside carrier")
    elems = sorted(_closure(s, seeds))
    index = {e: i for i, e in enumerate(elems)}
    label = f"sub({s.name})" if not seeds else (
        f"sub({s.name};" + ",".join(map(str, seeds)) + ")"
    )
    sub = FiniteStructure(
        name=label,
        size=len(elems),
        zero=index[s.zero],
        one=index[s.one],
        add=tuple(tuple(index[s.add[a][b]] for b in elems) for a in elems),
        mul=tuple(tuple(index[s.mul[a][b]] for b in elems) for a in elems),
        neg=tuple(index[s.neg[a]] for a in elems),
        inv=None if s.inv is None else tuple(index[s.inv[a]] for a in elems),
    )
    inclusion = Homomorphism(sub, s, tuple(elems))
    return sub, inclusion


def is_minimal(s: FiniteStructure) -> bool:
    """Generated by its constants alone (no proper substructure)."""
    return len(_closure(s, ())) == s.size


def generating_set(s: FiniteStructure) -> list[int]:
    """A small generating set, greedily extending the closure of {0, 1}.

    Empty exactly when the structure is minimal.
    """
    gens: list[int] = []
    closed = _closure(s, ())
    while len(closed) < s.size:
        gens.append(min(set(range(s.size)) - closed))
        closed = _closure(s, gens)
    return gens


@dataclass(frozen=True)
class Homomorphism:
    """A carrier map commuting with 0, 1, +, -, * and, whenever both sides
    carry one, with ^-1.  Construction validates all of this."""

    source: FiniteStructure
    target: FiniteStructure
    mapping: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "mapping", _as_row(self.mapping))
        src, tgt, m = self.source, self.target, self.mapping
        if len(m) != src.size or any(not 0 <= v < tgt.size for v in m):
            raise ValueError("mapping is not a function into the target carrier")
        if m[src.zero] != tgt.zero or m[src.one] != tgt.one:
            raise ValueError("constants not preserved")
        for a in range(src.size):
            if m[src.neg[a]] != tgt.neg[m[a]]:
                raise ValueError(f"negation not preserved at {a}")
            for b in range(src.size):
                if m[src.add[a][b]] != tgt.add[m[a]][m[b]]:
                    raise ValueError(f"addition not preserved at ({a},{b})")
                if m[src.mul[a][b]] != tgt.mul[m[a]][m[b]]:
                    raise ValueError(f"multiplication not preserved at ({a},{b})")
        if src.inv is not None and tgt.inv is not None:
            for a in range(src.size):
                if m[src.inv[a]] != tgt.inv[m[a]]:
                    raise ValueError(f"inverse not preserved at {a}")

    def __call__(self, x: int) -> int:
        return self.mapping[x]

    @property
    def is_injective(self) -> bool:
        return len(set(self.mapping)) == len(self.mapping)

    @property
    def is_surjective(self) -> bool:
        return len(set(self.mapping)) == self.target.size

    def __repr__(self) -> str:
        return (
            f"Homomorphism({self.source.name} -> {self.target.name}, "
            f"{list(self.mapping)})"
        )


def _propagate(src, tgt, gens, images, with_inv):
    """Force a map from generator images by closing under the operations.

    Returns the full mapping, or None on any conflict.  Every pair of
    defined elements is combined exactly once, so a returned mapping already
    commutes with the propagated operations everywhere.
    """
    m = [-1] * src.size
    queue: list[int] = []

    def assign(e, v):
        if m[e] == -1:
            m[e] = v
            queue.append(e)
            return True
        return m[e] == v

    if not assign(src.zero, tgt.zero):
        return None
    if not assign(src.one, tgt.one):
        return None
    for g, img in zip(gens, images):
        if not assign(g, img):
            return None
    qi = 0
    while qi < len(queue):
        e = queue[qi]
        qi += 1
        if not assign(src.neg[e], tgt.neg[m[e]]):
            return None
        if with_inv and not assign(src.inv[e], tgt.inv[m[e]]):
            return None
        for d in queue[:qi]:
            if not assign(src.add[e][d], tgt.add[m[e]][m[d]]):
                return None
            if not assign(src.add[d][e], tgt.add[m[d]][m[e]]):
                return None
            if not assign(src.mul[e][d], tgt.mul[m[e]][m[d]]):
                return None
            if not assign(src.mul[d][e], tgt.mul[m[d]][m[e]]):
                return None
    if -1 in m:  # generators failed to generate; cannot happen for our gens
        return None  # pragma: no cover
    return m


def find_homomorphisms(
    src: FiniteStructure,
    tgt: FiniteStructure,
    require_inv: bool = True,
    search_bound: int = 1_000_000,
) -> list[Homomorphism]:
    """All homomorphisms src -> tgt, by propagating generator images.

    Candidate maps are forced from the images of a generating set, so the
    search space is |target| ** |generators| rather than all carrier maps.
    With require_inv the inverse is propagated too (both sides must carry
    one); without it, candidates are still kept only when they satisfy the
    Homomorphism invariant, which re-checks the inverse whenever both sides
    carry one.
    """
    if require_inv and (src.inv is None or tgt.inv is None):
        raise MissingInverseTable("both structures need inverse tables")
    gens = generating_set(src)
    if tgt.size ** len(gens) > search_bound:
        raise SearchBoundExceeded(
            f"{tgt.size}^{len(gens)} candidate maps exceed bound {search_bound}"
        )
    out = []
    for images in itertools.product(range(tgt.size), repeat=len(gens)):
        m = _propagate(src, tgt, gens, images, require_inv)
        if m is None:
            continue
        try:
            out.append(Homomorphism(src, tgt, tuple(m)))
        except ValueError:
            continue
    return out


def idempotents(s: FiniteStructure) -> tuple[int, ...]:
    """All e with e*e = e, ascending."""
    return tuple(e for e in range(s.size) if s.mul[e][e] == e)


def unit_of(s: FiniteStructure, x: int) -> int:
    """The local unit x*x^-1 of x."""
    if s.inv is None:
        raise MissingInverseTable(f"{s.name} has no inverse table")
    return s.mul[x][s.inv[x]]


@dataclass(frozen=True)
class PrincipalIdeal:
    """The ideal x*R with its own ring structure and the map onto it."""

    elements: tuple[int, ...]
    unit: int
    ring: FiniteStructure
    projection: Homomorphism  # y |-> (x*x^-1)*y, re-indexed into the ideal


def principal_ideal(s: FiniteStructure, x: int) -> PrincipalIdeal:
    """The principal ideal of x in a meadow, as a ring with unit x*x^-1.

    Verifies that the ideal of x and of its local unit coincide, that x,
    x^-1 and the local unit all lie inside, and that y |-> unit*y maps the
    whole structure onto the ideal.
    """
    if s.inv is None:
        raise MissingInverseTable(f"{s.name} has no inverse table")
    if not 0 <= x < s.size:
        raise ValueError(f"element {x} outside carrier")
    if s.mul[x][s.mul[x][s.inv[x]]] != x:
        raise NotAMeadow(f"restricted inverse law fails at {x} in {s.name}")
    e = unit_of(s, x)
    elems = sorted({s.mul[x][r] for r in range(s.size)})
    by_unit = sorted({s.mul[e][r] for r in range(s.size)})
    inside = set(elems)
    if by_unit != elems or not {x, e, s.inv[x]} <= inside:
        raise NotAMeadow(f"{s.name} does not behave like a meadow at {x}")
    index = {v: i for i, v in enumerate(elems)}
    try:
        ring = FiniteStructure(
            name=f"{s.name}|{x}",
            size=len(elems),
            zero=index[s.zero],
            one=index[e],
            add=tuple(tuple(index[s.add[a][b]] for b in elems) for a in elems),
            mul=tuple(tuple(index[s.mul[a][b]] for b in elems) for a in elems),
            neg=tuple(index[s.neg[a]] for a in elems),
            inv=tuple(index[s.inv[a]] for a in elems),
        )
    except KeyError:
        raise NotAMeadow(
            f"ideal of {x} in {s.name} is not closed under the operations"
        ) from None
    projection = Homomorphism(
        s, ring, tuple(index[s.mul[e][y]] for y in range(s.size))
    )
    return PrincipalIdeal(tuple(elems), e, ring, projection)


# --- file format -----------------------------------------------------------
#
# Line-oriented UTF-8: `name:`, `size: n`, `zero: i`, `one: j`, then `add:`
# and `mul:` each followed by n rows of n indices, then `neg:` and
# optionally `inv:` each followed by one row.  `#` starts a comment.

def dump_structure(s: FiniteStructure) -> str:
    lines = [
        f"name: {s.name}",
        f"size: {s.size}",
        f"zero: {s.zero}",
        f"one: {s.one}",
        "add:",
        *(" ".join(map(str, row)) for row in s.add),
        "mul:",
        *(" ".join(map(str, row)) for row in s.mul),
        "neg:",
        " ".join(map(str, s.neg)),
    ]
    if s.inv is not None:
        lines.append("inv:")
        lines.append(" ".join(map(str, s.inv)))
    return "\n".join(lines) + "\n"


class _Lines:
    def __init__(self, text: str):
        self.items = []
        for no, raw in enumerate(text.splitlines(), start=1):
            content = raw.split("#", 1)[0].strip()
            if content:
                self.items.append((no, content))
        self.i = 0

    def next(self, what: str) -> tuple[int, str]:
        if self.i >= len(self.items):
            last = self.items[-1][0] if self.items else 0
            raise FormatError(f"unexpected end of file, expected {what}", last + 1)
        item = self.items[self.i]
        self.i += 1
        return item

    def done(self) -> bool:
        return self.i >= len(self.items)


def _expect_key(lines: _Lines, key: str) -> str:
    no, content = lines.next(f"'{key}:'")
    if not content.startswith(key + ":"):
        raise FormatError(f"expected '{key}:', found {content!r}", no)
    return content[len(key) + 1 :].strip()


def _int_row(no: int, content: str, n: int) -> tuple[int, ...]:
    parts = content.split()
    try:
        row = tuple(int(p) for p in parts)
    except ValueError:
        raise FormatError(f"non-integer entry in {content!r}", no) from None
    if len(row) != n:
        raise FormatError(f"expected {n} entries, found {len(row)}", no)
    return row


def load_structure(text: str) -> FiniteStructure:
    """Parse the structure file format; raises FormatError with line numbers."""
    lines = _Lines(text)
    name = _expect_key(lines, "name")
    try:
        size = int(_expect_key(lines, "size"))
        zero = int(_expect_key(lines, "zero"))
        one = int(_expect_key(lines, "one"))
    except ValueError:
        raise FormatError("size, zero and one must be integers", 0) from None

    def table(key):
        header = _expect_key(lines, key)
        rows = []
        if header:
            raise FormatError(f"'{key}:' takes no inline value", 0)
        for _ in range(size):
            no, content = lines.next(f"a row of the {key} table")
            rows.append(_int_row(no, content, size))
        return tuple(rows)

    add = table("add")
    mul = table("mul")
    _expect_key(lines, "neg")
    no, content = lines.next("the neg row")
    neg = _int_row(no, content, size)
    inv = None
    if not lines.done():
        _expect_key(lines, "inv")
        no, content = lines.next("the inv row")
        inv = _int_row(no, content, size)
    if not lines.done():
        no, content = lines.next("")
        raise FormatError(f"trailing content {content!r}", no)
    try:
        return FiniteStructure(name, size, zero, one, add, mul, neg, inv)
    except ValueError as exc:
        raise FormatError(str(exc), 0) from None
