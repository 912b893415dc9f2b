"""Finite posets, preorders, monotone maps, and their basic order theory.

Elements are opaque hashable identifiers; the declared element sequence
fixes the canonical iteration order used by every enumeration,
representative choice, and "first found" answer in the package.  All
values are immutable after construction and all operations are pure.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator


class StructureError(ValueError):
    """A constructor invariant failed; ``law`` names the violated law."""

    def __init__(self, law: str, message: str):
        super().__init__(f"{law}: {message}")
        self.law = law


def _transitive_gap(rows: tuple[int, ...]) -> tuple[int, int] | None:
    # rows[i] = bitmask of j with e_i <= e_j.  x<=y forces up(y) <= up(x).
    for i, row in enumerate(rows):
        m = row
        while m:
            j = (m & -m).bit_length() - 1
            m &= m - 1
            if rows[j] & ~row:
                return i, j
    return None


def _close_rows(rows: list[int]) -> list[int]:
    # reflexive-transitive closure by iterated squaring
    n = len(rows)
    changed = True
    while changed:
        changed = False
        for i in range(n):
            acc = rows[i]
            m = rows[i]
            while m:
                j = (m & -m).bit_length() - 1
                m &= m - 1
                acc |= rows[j]
            if acc != rows[i]:
                rows[i] = acc
                changed = True
    return rows


@dataclass(frozen=True)
class Preorder:
    """Finite reflexive transitive relation; antisymmetry not required."""

    elements: tuple
    pairs: frozenset

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(self.elements))
        object.__setattr__(self, "pairs", frozenset((x, y) for x, y in self.pairs))
        if len(set(self.elements)) != len(self.elements):
            raise StructureError("distinctness", "duplicate element identifiers")
        idx = {e: i for i, e in enumerate(self.elements)}
        for x, y in self.pairs:
            if x not in idx or y not in idx:
                raise StructureError("membership", f"pair ({x!r},{y!r}) outside the carrier")
        rows = [0] * len(self.elements)
        for x, y in self.pairs:
            rows[idx[x]] |= 1 << idx[y]
        for i, e in enumerate(self.elements):
            if not rows[i] >> i & 1:
                raise StructureError("reflexivity", f"{e!r} <= {e!r} missing")
        gap = _transitive_gap(tuple(rows))
        if gap is not None:
            i, j = gap
            k = (rows[j] & ~rows[i]).bit_length() - 1
            raise StructureError(
                "transitivity",
                f"{self.elements[i]!r} <= {self.elements[j]!r} <= {self.elements[k]!r}"
                f" but {self.elements[i]!r} <= {self.elements[k]!r} missing",
            )
        object.__setattr__(self, "_index", idx)
        object.__setattr__(self, "_rows", tuple(rows))
        self._validate()

    def _validate(self):
        pass

    @property
    def n(self) -> int:
        return len(self.elements)

    def index(self, x) -> int:
        return self._index[x]

    def leq(self, x, y) -> bool:
        return bool(self._rows[self._index[x]] >> self._index[y] & 1)

    def up_mask(self, x) -> int:
        return self._rows[self._index[x]]

    def __repr__(self):
        return f"{type(self).__name__}({list(self.elements)!r})"


@dataclass(frozen=True)
class FinPoset(Preorder):
    """Finite partial order: a Preorder that is also antisymmetric."""

    def _validate(self):
        for i in range(self.n):
            for j in range(i + 1, self.n):
                if self._rows[i] >> j & 1 and self._rows[j] >> i & 1:
                    raise StructureError(
                        "antisymmetry",
                        f"{self.elements[i]!r} and {self.elements[j]!r} are mutually related",
                    )

    @classmethod
    def from_generators(cls, elements, gens) -> "FinPoset":
        """Build from generating pairs: reflexive-transitive closure is taken."""
        elements = tuple(elements)
        idx = {e: i for i, e in enumerate(elements)}
        rows = [1 << i for i in range(len(elements))]
        for x, y in gens:
            if x not in idx or y not in idx:
                raise StructureError("membership", f"pair ({x!r},{y!r}) outside the carrier")
            rows[idx[x]] |= 1 << idx[y]
        rows = _close_rows(rows)
        pairs = {
            (elements[i], elements[j])
            for i in range(len(elements))
            for j in range(len(elements))
            if rows[i] >> j & 1
        }
        return cls(elements, frozenset(pairs))

    @classmethod
    def chain(cls, n: int, prefix: str = "c") -> "FinPoset":
        els = tuple(f"{prefix}{i}" for i in range(n))
        return cls.from_generators(els, [(els[i], els[i + 1]) for i in range(n - 1)])

    @classmethod
    def antichain(cls, n: int, prefix: str = "a") -> "FinPoset":
        els = tuple(f"{prefix}{i}" for i in range(n))
        return cls(els, frozenset((e, e) for e in els))

    def down_set(self, x) -> tuple:
        return tuple(e for e in self.elements if self.leq(e, x))

    def up_set(self, x) -> tuple:
        return tuple(e for e in self.elements if self.leq(x, e))

    def bottom(self):
        """The least element, or None."""
        full = (1 << self.n) - 1
        for i, e in enumerate(self.elements):
            if self._rows[i] == full:
                return e
        return None

    def is_pointed(self) -> bool:
        return self.n > 0 and self.bottom() is not None

    def covers(self) -> list[tuple]:
        """Hasse edges (x, y): x < y with nothing strictly between."""
        out = []
        for i, x in enumerate(self.elements):
            for j, y in enumerate(self.elements):
                if i == j or not self._rows[i] >> j & 1:
                    continue
                between = self._rows[i] & ~(1 << i) & ~(1 << j)
                if not any(
                    between >> k & 1 and self._rows[k] >> j & 1 and k != j
                    for k in range(self.n)
                ):
                    out.append((x, y))
        return out

    def restrict(self, members) -> "FinPoset":
        """Induced sub-poset on ``members``, keeping the ambient element order."""
        members = set(members)
        els = tuple(e for e in self.elements if e in members)
        pairs = frozenset((x, y) for (x, y) in self.pairs if x in members and y in members)
        return FinPoset(els, pairs)


@dataclass(frozen=True)
class Subset:
    """A subset of a poset's carrier."""

    parent: FinPoset
    members: frozenset

    def __post_init__(self):
        object.__setattr__(self, "members", frozenset(self.members))
        for x in self.members:
            if x not in self.parent._index:
                raise StructureError("membership", f"{x!r} not in the parent poset")

    def __iter__(self):
        return (e for e in self.parent.elements if e in self.members)

    def __len__(self):
        return len(self.members)


@dataclass(frozen=True)
class MonotoneMap:
    """An order-preserving map; ``values`` is aligned with ``dom.elements``."""

    dom: FinPoset
    cod: FinPoset
    values: tuple

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        if len(self.values) != self.dom.n:
            raise StructureError("totality", "assignment must cover every element")
        for v in self.values:
            if v not in self.cod._index:
                raise StructureError("membership", f"value {v!r} not in the codomain")
        for i, x in enumerate(self.dom.elements):
            for j, y in enumerate(self.dom.elements):
                if self.dom._rows[i] >> j & 1 and not self.cod.leq(self.values[i], self.values[j]):
                    raise StructureError(
                        "monotonicity",
                        f"{x!r} <= {y!r} but {self.values[i]!r} <= {self.values[j]!r} fails",
                    )

    @classmethod
    def make(cls, dom: FinPoset, cod: FinPoset, assignment) -> "MonotoneMap":
        if callable(assignment):
            vals = tuple(assignment(x) for x in dom.elements)
        else:
            vals = tuple(assignment[x] for x in dom.elements)
        return cls(dom, cod, vals)

    @classmethod
    def identity(cls, P: FinPoset) -> "MonotoneMap":
        return cls(P, P, P.elements)

    def __call__(self, x):
        return self.values[self.dom._index[x]]

    def as_dict(self) -> dict:
        return dict(zip(self.dom.elements, self.values))

    def is_injective(self) -> bool:
        return len(set(self.values)) == len(self.values)

    def is_surjective(self) -> bool:
        return set(self.values) == set(self.cod.elements)

    def __repr__(self):
        body = ", ".join(f"{x!r}->{v!r}" for x, v in zip(self.dom.elements, self.values))
        return f"MonotoneMap({body})"


def compose(g: MonotoneMap, f: MonotoneMap) -> MonotoneMap:
    """g after f."""
    if f.cod != g.dom:
        raise StructureError("composability", "codomain/domain mismatch")
    return MonotoneMap(f.dom, g.cod, tuple(g(v) for v in f.values))


def map_leq(f: MonotoneMap, g: MonotoneMap) -> bool:
    """Pointwise order on parallel maps."""
    if f.dom != g.dom or f.cod != g.cod:
        raise StructureError("composability", "maps are not parallel")
    return all(f.cod.leq(a, b) for a, b in zip(f.values, g.values))


def is_semidirected(P: FinPoset, S: Subset) -> bool:
    """Every pair in S has an upper bound within S (vacuous for empty S)."""
    if S.parent != P:
        raise StructureError("membership", "subset belongs to a different poset")
    mem = list(S)
    for x in mem:
        for y in mem:
            if not any(P.leq(x, z) and P.leq(y, z) for z in mem):
                return False
    return True


def is_directed(P: FinPoset, S: Subset) -> bool:
    """Semidirected and inhabited."""
    return len(S.members) > 0 and is_semidirected(P, S)


def lub(P: FinPoset, S: Subset):
    """Least upper bound of S in P, or None if it does not exist."""
    if S.parent != P:
        raise StructureError("membership", "subset belongs to a different poset")
    ubs = [u for u in P.elements if all(P.leq(x, u) for x in S.members)]
    for u in ubs:
        if all(P.leq(u, v) for v in ubs):
            return u
    return None


def subsets(P: FinPoset) -> Iterator[Subset]:
    """All subsets, in ascending bitmask order over the canonical element order."""
    for mask in range(1 << P.n):
        yield Subset(P, frozenset(P.elements[i] for i in range(P.n) if mask >> i & 1))


def is_up_closed(P: FinPoset, members) -> bool:
    members = set(members)
    return all(y in members for x in members for y in P.up_set(x))


def scott_opens(P: FinPoset) -> list[Subset]:
    """All up-closed subsets, in canonical (bitmask) order.

    On a finite poset every directed set contains its supremum, so
    inaccessibility by directed suprema is automatic and Scott-open
    coincides with up-closed.
    """
    return [S for S in subsets(P) if is_up_closed(P, S.members)]


def directed_subsets(P: FinPoset) -> list[Subset]:
    return [S for S in subsets(P) if is_directed(P, S)]


def semidirected_subsets(P: FinPoset) -> list[Subset]:
    return [S for S in subsets(P) if is_semidirected(P, S)]


def enumerate_monotone_maps(A: FinPoset, B: FinPoset) -> list[MonotoneMap]:
    """Every monotone map A -> B exactly once, lexicographic in the assignment."""
    maps: list[MonotoneMap] = []
    vals: list = []

    def ok(i: int, v) -> bool:
        vi = B._index[v]
        for j in range(i):
            vj = B._index[vals[j]]
            if A._rows[j] >> i & 1 and not B._rows[vj] >> vi & 1:
                return False
            if A._rows[i] >> j & 1 and not B._rows[vi] >> vj & 1:
                return False
        return True

    def rec(i: int):
        if i == A.n:
            maps.append(MonotoneMap(A, B, tuple(vals)))
            return
        for v in B.elements:
            if ok(i, v):
                vals.append(v)
                rec(i + 1)
                vals.pop()

    rec(0)
    return maps


def hom_poset(A: FinPoset, B: FinPoset) -> tuple[FinPoset, dict]:
    """The pointwise-ordered poset of monotone maps A -> B.

    Returns (poset, element -> MonotoneMap); element ids are ("fn", values).
    """
    maps = enumerate_monotone_maps(A, B)
    els = tuple(("fn",) + f.values for f in maps)
    by_el = dict(zip(els, maps))
    pairs = frozenset(
        (e1, e2) for e1, f1 in by_el.items() for e2, f2 in by_el.items() if map_leq(f1, f2)
    )
    return FinPoset(els, pairs), by_el


def poset_reflect(Q: Preorder) -> tuple[FinPoset, dict]:
    """Collapse x<=y<=x cycles; representative = least member in canonical order.

    Returns (poset of representatives, assignment element -> representative).
    """
    reps: dict = {}
    for i, x in enumerate(Q.elements):
        if x in reps:
            continue
        for y in Q.elements[i:]:
            if Q.leq(x, y) and Q.leq(y, x):
                reps[y] = x
    rep_els = tuple(x for x in Q.elements if reps[x] == x)
    pairs = frozenset(
        (a, b) for a in rep_els for b in rep_els if Q.leq(a, b)
    )
    return FinPoset(rep_els, pairs), reps


def is_order_embedding(f: MonotoneMap) -> bool:
    """f(x) <= f(y) iff x <= y, for all x, y."""
    for x in f.dom.elements:
        for y in f.dom.elements:
            if f.cod.leq(f(x), f(y)) != f.dom.leq(x, y):
                return False
    return True


def _invariants(P: FinPoset) -> dict:
    inv = {}
    for i, e in enumerate(P.elements):
        down = sum(1 for j in range(P.n) if P._rows[j] >> i & 1)
        up = bin(P._rows[i]).count("1")
        inv[e] = (down, up)
    return inv


def poset_iso(A: FinPoset, B: FinPoset):
    """A pair of mutually inverse monotone maps, or None.

    Deterministic: the first bijection found by backtracking over
    degree-compatible candidates in canonical order.
    """
    if A.n != B.n:
        return None
    inv_a, inv_b = _invariants(A), _invariants(B)
    if sorted(inv_a.values()) != sorted(inv_b.values()):
        return None
    assign: dict = {}
    used: set = set()

    def rec(i: int):
        if i == A.n:
            return True
        x = A.elements[i]
        for y in B.elements:
            if y in used or inv_a[x] != inv_b[y]:
                continue
            if all(
                A.leq(x, z) == B.leq(y, assign[z]) and A.leq(z, x) == B.leq(assign[z], y)
                for z in assign
            ):
                assign[x] = y
                used.add(y)
                if rec(i + 1):
                    return True
                del assign[x]
                used.remove(y)
        return False

    if not rec(0):
        return None
    fwd = MonotoneMap.make(A, B, assign)
    back = MonotoneMap.make(B, A, {v: k for k, v in assign.items()})
    return fwd, back


def arrow_poset(Y: FinPoset) -> FinPoset:
    """Pairs (y, y') with y <= y', ordered componentwise."""
    els = tuple(
        ("pr", y, z) for y in Y.elements for z in Y.elements if Y.leq(y, z)
    )
    pairs = frozenset(
        (a, b)
        for a in els
        for b in els
        if Y.leq(a[1], b[1]) and Y.leq(a[2], b[2])
    )
    return FinPoset(els, pairs)


def quotient_poset(B: FinPoset, seeds) -> tuple[FinPoset, dict]:
    """The poset quotient of B by the congruence generated by ``seeds``.

    Alternates (a) closing the generated equivalence, (b) inducing the
    class preorder from B's order, (c) collapsing preorder cycles, until
    stable.  Returns (Q, assignment); Q's elements are the class
    representatives (least member in canonical order), so the universal
    factorisation of any coequalising map is evaluation at representatives.
    """
    parent = {x: x for x in B.elements}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx == ry:
            return
        if B.index(rx) > B.index(ry):
            rx, ry = ry, rx
        parent[ry] = rx

    for x, y in seeds:
        union(x, y)
    while True:
        reps = [x for x in B.elements if find(x) == x]
        idx = {r: i for i, r in enumerate(reps)}
        rows = [1 << i for i in range(len(reps))]
        for x, y in B.pairs:
            rows[idx[find(x)]] |= 1 << idx[find(y)]
        rows = _close_rows(rows)
        merged = False
        for i in range(len(reps)):
            for j in range(i + 1, len(reps)):
                if rows[i] >> j & 1 and rows[j] >> i & 1:
                    union(reps[i], reps[j])
                    merged = True
        if not merged:
            pairs = frozenset(
                (reps[i], reps[j])
                for i in range(len(reps))
                for j in range(len(reps))
                if rows[i] >> j & 1
            )
            Q = FinPoset(tuple(reps), pairs)
            return Q, {x: find(x) for x in B.elements}


# ---------------------------------------------------------------------------
# Exhaustive generation of small posets, deduplicated up to isomorphism.

def _extensions(rows: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    # all ways of adding one element to a poset given by up-mask rows:
    # pick a down-closed D (below the new point) and an up-closed U (above it)
    # with every d <= every u; each labeled poset arises exactly once.
    n = len(rows)
    down_masks = [
        sum(1 << j for j in range(n) if rows[j] >> i & 1) for i in range(n)
    ]
    for dmask in range(1 << n):
        if any(dmask >> i & 1 and down_masks[i] & ~dmask for i in range(n)):
            continue
        rest = [i for i in range(n) if not dmask >> i & 1]
        for pick in range(1 << len(rest)):
            umask = 0
            for k, i in enumerate(rest):
                if pick >> k & 1:
                    umask |= 1 << i
            if any(umask >> i & 1 and rows[i] & ~umask for i in range(n)):
                continue
            if any(dmask >> d & 1 and (rows[d] & umask) != umask for d in range(n)):
                continue
            new = [rows[i] | ((1 << n) if dmask >> i & 1 else 0) for i in range(n)]
            new.append((1 << n) | umask)
            yield tuple(new)


@lru_cache(maxsize=None)
def _labeled_rows(n: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for rows in _labeled_rows(n - 1):
        out.extend(_extensions(rows))
    return tuple(out)


def _rows_to_poset(rows: tuple[int, ...], prefix: str = "x") -> FinPoset:
    els = tuple(f"{prefix}{i}" for i in range(len(rows)))
    pairs = frozenset(
        (els[i], els[j]) for i in range(len(rows)) for j in range(len(rows)) if rows[i] >> j & 1
    )
    return FinPoset(els, pairs)


@lru_cache(maxsize=None)
def all_posets(n: int) -> tuple[FinPoset, ...]:
    """All posets with exactly n elements, one per isomorphism class."""
    buckets: dict = {}
    out: list[FinPoset] = []
    for rows in _labeled_rows(n):
        P = _rows_to_poset(rows)
        key = (tuple(sorted(_invariants(P).values())), len(P.pairs))
        found = False
        for Q in buckets.get(key, ()):
            if poset_iso(P, Q) is not None:
                found = True
                break
        if not found:
            buckets.setdefault(key, []).append(P)
            out.append(P)
    return tuple(out)


def posets_upto(n: int, pointed: bool = False) -> tuple[FinPoset, ...]:
    """All posets with at most n elements up to iso; optionally only pointed ones."""
    out = []
    for k in range(n + 1):
        for P in all_posets(k):
            if not pointed or P.is_pointed():
                out.append(P)
    return tuple(out)
