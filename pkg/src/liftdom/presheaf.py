"""Internal posets in presheaves over a finite base poset.

The base is a finite poset of "stages" with the trivial topology, so the
subobject classifier at a stage is the set of sieves (down-closed sets of
stages below it) and first-order formulas are interpreted by the standard
stagewise forcing clauses.  This is the constructive backend: the sieve
lattice is genuinely non-boolean as soon as the base has a nontrivial
order, which is all the constructive phenomena checked here need.

Unlike classical finite posets, a finite internal poset need not have
suprema of its internally-directed subpresheaves, and a monotone natural
map need not preserve them; directed-completeness and Scott continuity
are therefore explicit checks rather than free facts.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Any

from .order import FinPoset, StructureError


class SortError(TypeError):
    """An internal formula or environment is ill-sorted."""


@dataclass(frozen=True)
class BasePoset:
    """The site: a finite poset of stages."""

    poset: FinPoset

    @property
    def stages(self) -> tuple:
        return self.poset.elements

    def leq(self, q, p) -> bool:
        return self.poset.leq(q, p)

    def down_list(self, p) -> tuple:
        """Stages <= p, in canonical stage order."""
        return tuple(q for q in self.stages if self.leq(q, p))

    def strict_pairs(self) -> tuple:
        """All (p, q) with q < p, in canonical order."""
        return tuple(
            (p, q) for p in self.stages for q in self.stages if q != p and self.leq(q, p)
        )

    def stages_desc(self) -> tuple:
        """A linear extension listing higher stages first."""
        return tuple(
            sorted(self.stages, key=lambda p: (-len(self.down_list(p)), self.poset.index(p)))
        )


@dataclass(frozen=True)
class Sieve:
    """A down-closed set of stages below ``stage``: a truth value at that stage."""

    base: BasePoset
    stage: Any
    members: frozenset

    def __post_init__(self):
        object.__setattr__(self, "members", frozenset(self.members))
        down = set(self.base.down_list(self.stage))
        for q in self.members:
            if q not in down:
                raise StructureError("membership", f"stage {q!r} is not below {self.stage!r}")
            for r in self.base.down_list(q):
                if r not in self.members:
                    raise StructureError("down-closure", f"{r!r} <= {q!r} missing from sieve")

    def restrict(self, q) -> "Sieve":
        return Sieve(self.base, q, self.members & set(self.base.down_list(q)))

    def __repr__(self):
        inner = ",".join(str(s) for s in sorted(self.members, key=self.base.poset.index))
        return "{" + inner + "}"


def sieves_on(base: BasePoset, p) -> tuple[Sieve, ...]:
    """All sieves on p, in ascending bitmask order over down_list(p)."""
    down = base.down_list(p)
    out = []
    for mask in range(1 << len(down)):
        members = frozenset(down[i] for i in range(len(down)) if mask >> i & 1)
        try:
            out.append(Sieve(base, p, members))
        except StructureError:
            continue
    return tuple(out)


@dataclass(frozen=True)
class Presheaf:
    """Stage-indexed finite sets with functorial restriction maps."""

    base: BasePoset
    stage_sets: tuple  # aligned with base.stages; each a tuple of element ids
    restrictions: tuple  # ((p, q, values) for each strict pair, values aligned with at(p))

    def __post_init__(self):
        object.__setattr__(self, "stage_sets", tuple(tuple(s) for s in self.stage_sets))
        if len(self.stage_sets) != len(self.base.stages):
            raise StructureError("totality", "one element set per stage is required")
        for s in self.stage_sets:
            if len(set(s)) != len(s):
                raise StructureError("distinctness", "duplicate identifiers at a stage")
        res = {}
        for p, q, values in self.restrictions:
            res[(p, q)] = tuple(values)
        for pair in self.base.strict_pairs():
            if pair not in res:
                raise StructureError("totality", f"restriction {pair[0]!r}->{pair[1]!r} missing")
        object.__setattr__(
            self,
            "restrictions",
            tuple((p, q, res[(p, q)]) for p, q in self.base.strict_pairs()),
        )
        object.__setattr__(self, "_res", {(p, q): v for p, q, v in self.restrictions})
        for (p, q), values in self._res.items():
            if len(values) != len(self.at(p)):
                raise StructureError("totality", f"restriction {p!r}->{q!r} must be total")
            tgt = set(self.at(q))
            for v in values:
                if v not in tgt:
                    raise StructureError("membership", f"{v!r} not at stage {q!r}")
        for p in self.base.stages:
            for q in self.base.down_list(p):
                for r in self.base.down_list(q):
                    if p == q or q == r:
                        continue
                    for x in self.at(p):
                        if self.res_el(q, r, self.res_el(p, q, x)) != self.res_el(p, r, x):
                            raise StructureError(
                                "functoriality",
                                f"restrictions {p!r}->{q!r}->{r!r} disagree with {p!r}->{r!r} at {x!r}",
                            )

    def at(self, p) -> tuple:
        return self.stage_sets[self.base.poset.index(p)]

    def res_el(self, p, q, x):
        if p == q:
            return x
        values = self._res[(p, q)]
        return values[self.at(p).index(x)]

    @classmethod
    def make(cls, base: BasePoset, stage_sets: dict, restrictions: dict) -> "Presheaf":
        sets = tuple(tuple(stage_sets[p]) for p in base.stages)
        res = []
        for p, q in base.strict_pairs():
            mapping = restrictions[(p, q)]
            res.append((p, q, tuple(mapping[x] for x in stage_sets[p])))
        return cls(base, sets, tuple(res))


@dataclass(frozen=True)
class InternalPoset:
    """A presheaf with a stagewise partial order and monotone restrictions."""

    carrier: Presheaf
    orders: tuple  # aligned with base.stages; frozensets of (x, y) pairs

    def __post_init__(self):
        object.__setattr__(self, "orders", tuple(frozenset(o) for o in self.orders))
        if len(self.orders) != len(self.base.stages):
            raise StructureError("totality", "one order per stage is required")
        posets = tuple(
            FinPoset(self.carrier.stage_sets[i], self.orders[i])
            for i in range(len(self.orders))
        )
        object.__setattr__(self, "_stage_posets", posets)
        for p in self.base.stages:
            for q in self.base.down_list(p):
                if p == q:
                    continue
                for x, y in self.orders[self.base.poset.index(p)]:
                    if not self.leq_at(q, self.res_el(p, q, x), self.res_el(p, q, y)):
                        raise StructureError(
                            "monotonicity",
                            f"restriction {p!r}->{q!r} is not monotone on {x!r} <= {y!r}",
                        )

    @property
    def base(self) -> BasePoset:
        return self.carrier.base

    def at(self, p) -> tuple:
        return self.carrier.at(p)

    def res_el(self, p, q, x):
        return self.carrier.res_el(p, q, x)

    def stage_poset(self, p) -> FinPoset:
        return self._stage_posets[self.base.poset.index(p)]

    def leq_at(self, p, x, y) -> bool:
        return self.stage_poset(p).leq(x, y)

    def size(self) -> int:
        return sum(len(s) for s in self.carrier.stage_sets)

    @classmethod
    def make(cls, base: BasePoset, stage_sets: dict, restrictions: dict, orders: dict) -> "InternalPoset":
        carrier = Presheaf.make(base, stage_sets, restrictions)
        ords = tuple(frozenset(orders[p]) for p in base.stages)
        return cls(carrier, ords)

    @classmethod
    def constant(cls, base: BasePoset, P: FinPoset) -> "InternalPoset":
        """The constant internal poset: P at every stage, identity restrictions."""
        sets = {p: P.elements for p in base.stages}
        res = {(p, q): {x: x for x in P.elements} for p, q in base.strict_pairs()}
        orders = {p: P.pairs for p in base.stages}
        return cls.make(base, sets, res, orders)


@dataclass(frozen=True)
class Subpresheaf:
    """Per-stage subsets of an internal poset, closed under restriction."""

    parent: InternalPoset
    members: tuple  # aligned with base.stages; frozensets

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(frozenset(m) for m in self.members))
        base = self.parent.base
        if len(self.members) != len(base.stages):
            raise StructureError("totality", "one member set per stage is required")
        for p in base.stages:
            stage = set(self.parent.at(p))
            for x in self.at(p):
                if x not in stage:
                    raise StructureError("membership", f"{x!r} not at stage {p!r}")
                for q in base.down_list(p):
                    if q != p and self.parent.res_el(p, q, x) not in self.at(q):
                        raise StructureError(
                            "restriction-closure",
                            f"{x!r} at {p!r} restricts outside the subpresheaf at {q!r}",
                        )

    def at(self, p) -> frozenset:
        return self.members[self.parent.base.poset.index(p)]

    @classmethod
    def make(cls, parent: InternalPoset, members: dict) -> "Subpresheaf":
        return cls(parent, tuple(frozenset(members.get(p, ())) for p in parent.base.stages))

    def union(self, other: "Subpresheaf") -> "Subpresheaf":
        return Subpresheaf(self.parent, tuple(a | b for a, b in zip(self.members, other.members)))


@dataclass(frozen=True)
class NatTrans:
    """A monotone natural transformation between internal posets."""

    dom: InternalPoset
    cod: InternalPoset
    components: tuple  # aligned with base.stages; value tuples aligned with dom.at(p)

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(tuple(c) for c in self.components))
        base = self.dom.base
        if self.cod.base != base:
            raise StructureError("composability", "domain and codomain bases differ")
        if len(self.components) != len(base.stages):
            raise StructureError("totality", "one component per stage is required")
        for i, p in enumerate(base.stages):
            src, comp = self.dom.at(p), self.components[i]
            if len(comp) != len(src):
                raise StructureError("totality", f"component at {p!r} must be total")
            tgt = set(self.cod.at(p))
            for v in comp:
                if v not in tgt:
                    raise StructureError("membership", f"{v!r} not at stage {p!r}")
            for x in src:
                for y in src:
                    if self.dom.leq_at(p, x, y) and not self.cod.leq_at(
                        p, self.apply(p, x), self.apply(p, y)
                    ):
                        raise StructureError(
                            "monotonicity", f"component at {p!r} breaks {x!r} <= {y!r}"
                        )
        for p in base.stages:
            for q in base.down_list(p):
                if q == p:
                    continue
                for x in self.dom.at(p):
                    lhs = self.cod.res_el(p, q, self.apply(p, x))
                    rhs = self.apply(q, self.dom.res_el(p, q, x))
                    if lhs != rhs:
                        raise StructureError(
                            "naturality",
                            f"square at {x!r} for {p!r}->{q!r} does not commute",
                        )

    def apply(self, p, x):
        i = self.dom.base.poset.index(p)
        return self.components[i][self.dom.at(p).index(x)]

    @classmethod
    def make(cls, dom: InternalPoset, cod: InternalPoset, fn) -> "NatTrans":
        comps = tuple(
            tuple(fn(p, x) for x in dom.at(p)) for p in dom.base.stages
        )
        return cls(dom, cod, comps)

    @classmethod
    def identity(cls, A: InternalPoset) -> "NatTrans":
        return cls(A, A, A.carrier.stage_sets)

    def __repr__(self):
        return f"NatTrans({self.components!r})"


def nt_compose(g: NatTrans, f: NatTrans) -> NatTrans:
    """g after f."""
    if f.cod != g.dom:
        raise StructureError("composability", "codomain/domain mismatch")
    return NatTrans.make(f.dom, g.cod, lambda p, x: g.apply(p, f.apply(p, x)))


def nt_leq(f: NatTrans, g: NatTrans) -> bool:
    """Stagewise pointwise order on parallel transformations."""
    if f.dom != g.dom or f.cod != g.cod:
        raise StructureError("composability", "maps are not parallel")
    return all(
        f.cod.leq_at(p, f.apply(p, x), g.apply(p, x))
        for p in f.dom.base.stages
        for x in f.dom.at(p)
    )


def omega(base: BasePoset) -> InternalPoset:
    """The subobject classifier: sieves at each stage, ordered by inclusion."""
    sets = {p: sieves_on(base, p) for p in base.stages}
    res = {
        (p, q): {s: s.restrict(q) for s in sets[p]} for p, q in base.strict_pairs()
    }
    orders = {
        p: {(s, t) for s in sets[p] for t in sets[p] if s.members <= t.members}
        for p in base.stages
    }
    return InternalPoset.make(base, sets, res, orders)


def global_elements_raw(A: InternalPoset) -> list[dict]:
    """Restriction-compatible families (one element per stage), canonical order."""
    base = A.base
    stages = base.stages_desc()
    out: list[dict] = []
    fam: dict = {}

    def rec(i: int):
        if i == len(stages):
            out.append(dict(fam))
            return
        q = stages[i]
        forced = {
            A.res_el(r, q, fam[r]) for r in fam if base.leq(q, r)
        }
        if len(forced) > 1:
            return
        options = list(forced) if forced else list(A.at(q))
        for x in options:
            fam[q] = x
            rec(i + 1)
            del fam[q]

    rec(0)
    return out


def omega_top(O: InternalPoset, p) -> Sieve:
    return Sieve(O.base, p, frozenset(O.base.down_list(p)))


def omega_bot(O: InternalPoset, p) -> Sieve:
    return Sieve(O.base, p, frozenset())


# ---------------------------------------------------------------------------
# Kripke-Joyal forcing over the base poset with trivial covers.

@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Const:
    sort: InternalPoset
    stage: Any
    value: Any


@dataclass(frozen=True)
class TrueF:
    pass


@dataclass(frozen=True)
class FalseF:
    pass


@dataclass(frozen=True)
class Eq:
    lhs: Any
    rhs: Any


@dataclass(frozen=True)
class Leq:
    lhs: Any
    rhs: Any


@dataclass(frozen=True)
class In:
    term: Any
    sub: Subpresheaf


@dataclass(frozen=True)
class And:
    lhs: Any
    rhs: Any


@dataclass(frozen=True)
class Or:
    lhs: Any
    rhs: Any


@dataclass(frozen=True)
class Implies:
    lhs: Any
    rhs: Any


@dataclass(frozen=True)
class Not:
    body: Any


@dataclass(frozen=True)
class ForAll:
    var: str
    sort: Any  # InternalPoset or Subpresheaf
    body: Any


@dataclass(frozen=True)
class Exists:
    var: str
    sort: Any
    body: Any


def _sort_of(sort) -> InternalPoset:
    if isinstance(sort, Subpresheaf):
        return sort.parent
    if isinstance(sort, InternalPoset):
        return sort
    raise SortError(f"not a quantification sort: {sort!r}")


def _domain_at(sort, p):
    if isinstance(sort, Subpresheaf):
        return tuple(x for x in sort.parent.at(p) if x in sort.at(p))
    return sort.at(p)


def _interp(term, stage, env):
    if isinstance(term, Var):
        if term.name not in env:
            raise SortError(f"unbound variable {term.name!r}")
        return env[term.name]
    if isinstance(term, Const):
        A = term.sort
        if not A.base.leq(stage, term.stage):
            raise SortError(f"constant at {term.stage!r} used at incomparable {stage!r}")
        return A, A.res_el(term.stage, stage, term.value)
    raise SortError(f"not a term: {term!r}")


def _restrict_env(env, A_base: BasePoset, p, q):
    return {v: (A, A.res_el(p, q, x)) for v, (A, x) in env.items()}


def kj_forces(base: BasePoset, stage, formula, env: dict | None = None) -> bool:
    """Standard forcing over the base poset: universal clauses quantify over
    lower stages with the environment restricted; existentials and
    disjunctions are witnessed at the current stage."""
    env = env or {}
    if isinstance(formula, TrueF):
        return True
    if isinstance(formula, FalseF):
        return False
    if isinstance(formula, (Eq, Leq)):
        A, x = _interp(formula.lhs, stage, env)
        B, y = _interp(formula.rhs, stage, env)
        if A != B:
            raise SortError("comparison between different sorts")
        return x == y if isinstance(formula, Eq) else A.leq_at(stage, x, y)
    if isinstance(formula, In):
        A, x = _interp(formula.term, stage, env)
        if A != formula.sub.parent:
            raise SortError("membership test against a different parent")
        return x in formula.sub.at(stage)
    if isinstance(formula, And):
        return kj_forces(base, stage, formula.lhs, env) and kj_forces(base, stage, formula.rhs, env)
    if isinstance(formula, Or):
        return kj_forces(base, stage, formula.lhs, env) or kj_forces(base, stage, formula.rhs, env)
    if isinstance(formula, Implies):
        for q in base.down_list(stage):
            envq = _restrict_env(env, base, stage, q)
            if kj_forces(base, q, formula.lhs, envq) and not kj_forces(base, q, formula.rhs, envq):
                return False
        return True
    if isinstance(formula, Not):
        return all(
            not kj_forces(base, q, formula.body, _restrict_env(env, base, stage, q))
            for q in base.down_list(stage)
        )
    if isinstance(formula, ForAll):
        A = _sort_of(formula.sort)
        for q in base.down_list(stage):
            envq = _restrict_env(env, base, stage, q)
            for a in _domain_at(formula.sort, q):
                if not kj_forces(base, q, formula.body, {**envq, formula.var: (A, a)}):
                    return False
        return True
    if isinstance(formula, Exists):
        A = _sort_of(formula.sort)
        return any(
            kj_forces(base, stage, formula.body, {**env, formula.var: (A, a)})
            for a in _domain_at(formula.sort, stage)
        )
    raise SortError(f"not a formula: {formula!r}")


def directedness_formula(D: Subpresheaf):
    x, y, z = Var("x"), Var("y"), Var("z")
    bounded = Exists("z", D, And(Leq(x, z), Leq(y, z)))
    return And(
        Exists("x", D, TrueF()),
        ForAll("x", D, ForAll("y", D, bounded)),
    )


def semidirectedness_formula(D: Subpresheaf):
    x, y = Var("x"), Var("y")
    bounded = Exists("z", D, And(Leq(x, Var("z")), Leq(y, Var("z"))))
    return ForAll("x", D, ForAll("y", D, bounded))


def internal_directed(D: Subpresheaf, stage) -> bool:
    """Forced inhabitation plus pairwise bounds within D at every lower stage."""
    return kj_forces(D.parent.base, stage, directedness_formula(D))


def internal_semidirected(D: Subpresheaf, stage) -> bool:
    return kj_forces(D.parent.base, stage, semidirectedness_formula(D))


# ---------------------------------------------------------------------------
# Internal suprema and directed-completeness.

def _subpresheaves_on(A: InternalPoset, stage_list) -> list[Subpresheaf]:
    base = A.base
    out: list[Subpresheaf] = []
    chosen: dict = {}

    def rec(i: int):
        if i == len(stage_list):
            out.append(Subpresheaf.make(A, dict(chosen)))
            return
        q = stage_list[i]
        required = set()
        for r, picked in chosen.items():
            if base.leq(q, r):
                required |= {A.res_el(r, q, x) for x in picked}
        optional = [x for x in A.at(q) if x not in required]
        for mask in range(1 << len(optional)):
            extra = {optional[k] for k in range(len(optional)) if mask >> k & 1}
            chosen[q] = frozenset(required | extra)
            rec(i + 1)
        del chosen[q]

    rec(0)
    return out


def subpresheaves_below(A: InternalPoset, p) -> list[Subpresheaf]:
    """All subpresheaves supported on stages <= p (empty above p)."""
    stage_list = [q for q in A.base.stages_desc() if A.base.leq(q, p)]
    return _subpresheaves_on(A, stage_list)


def directed_subpresheaves_below(A: InternalPoset, p) -> list[Subpresheaf]:
    return [D for D in subpresheaves_below(A, p) if internal_directed(D, p)]


def internal_sup(A: InternalPoset, D: Subpresheaf, p):
    """The internal least upper bound of D at stage p, or None.

    s qualifies iff its restriction to every q <= p is the minimum of the
    stage-q upper bounds of D; this unfolds the forced statement that s is
    an upper bound and below every upper bound at every lower stage.
    """
    base = A.base
    mins = {}
    for q in base.down_list(p):
        ubs = [
            s
            for s in A.at(q)
            if all(
                A.leq_at(r, d, A.res_el(q, r, s))
                for r in base.down_list(q)
                for d in D.at(r)
            )
        ]
        m = next((u for u in ubs if all(A.leq_at(q, u, v) for v in ubs)), None)
        if m is None:
            return None
        mins[q] = m
    s = mins[p]
    for q in base.down_list(p):
        if A.res_el(p, q, s) != mins[q]:
            return None
    return s


@lru_cache(maxsize=None)
def is_internal_dcpo(A: InternalPoset):
    """(True, None), or (False, (stage, offending directed subpresheaf))."""
    for p in A.base.stages:
        for D in directed_subpresheaves_below(A, p):
            if internal_sup(A, D, p) is None:
                return False, (p, D)
    return True, None


def internal_bottom(A: InternalPoset):
    """The global least element as a stage-indexed family, or None."""
    fam = {}
    for p in A.base.stages:
        P = A.stage_poset(p)
        b = P.bottom()
        if b is None:
            return None
        fam[p] = b
    for p in A.base.stages:
        for q in A.base.down_list(p):
            if A.res_el(p, q, fam[p]) != fam[q]:
                return None
    return fam


def is_internal_pointed(A: InternalPoset) -> bool:
    return all(len(s) > 0 for s in A.carrier.stage_sets) and internal_bottom(A) is not None


def semidirected_sup(A: InternalPoset, D: Subpresheaf, p):
    """Least upper bound of a semidirected D at p (equals the sup of D + bottom)."""
    return internal_sup(A, D, p)


def positive_members(A: InternalPoset) -> Subpresheaf:
    """Elements x such that any semidirected subpresheaf whose supremum lies
    above x is forced to be inhabited, evaluated stage by stage."""
    base = A.base
    members: dict = {}
    for p in base.stages:
        good = set()
        for x in A.at(p):
            ok = True
            for q in base.down_list(p):
                xq = A.res_el(p, q, x)
                for D in subpresheaves_below(A, q):
                    if not internal_semidirected(D, q):
                        continue
                    s = internal_sup(A, D, q)
                    if s is None or not A.leq_at(q, xq, s):
                        continue
                    if not D.at(q):
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                good.add(x)
        members[p] = good
    return Subpresheaf.make(A, members)


def sub_internal_poset(D: Subpresheaf) -> tuple[InternalPoset, NatTrans]:
    """The internal poset spanned by a subpresheaf, with its inclusion."""
    A = D.parent
    base = A.base
    sets = {p: tuple(x for x in A.at(p) if x in D.at(p)) for p in base.stages}
    res = {
        (p, q): {x: A.res_el(p, q, x) for x in sets[p]} for p, q in base.strict_pairs()
    }
    orders = {
        p: {(x, y) for x in sets[p] for y in sets[p] if A.leq_at(p, x, y)}
        for p in base.stages
    }
    sub = InternalPoset.make(base, sets, res, orders)
    incl = NatTrans.make(sub, A, lambda p, x: x)
    return sub, incl


def restrict_to(A: InternalPoset, p) -> tuple[BasePoset, InternalPoset]:
    """A truncated to the base ``down-set of p``."""
    base = A.base
    sub_base = BasePoset(base.poset.restrict(base.down_list(p)))
    sets = {q: A.at(q) for q in sub_base.stages}
    res = {
        (q, r): {x: A.res_el(q, r, x) for x in A.at(q)} for q, r in sub_base.strict_pairs()
    }
    orders = {q: A.orders[base.poset.index(q)] for q in sub_base.stages}
    return sub_base, InternalPoset.make(sub_base, sets, res, orders)


# ---------------------------------------------------------------------------
# Enumeration of natural transformations, with and without continuity.

def enumerate_nat_trans(A: InternalPoset, B: InternalPoset) -> list[NatTrans]:
    """All order-preserving natural transformations A -> B, in canonical order."""
    base = A.base
    stages = base.stages_desc()
    comps: dict = {}
    out: list[NatTrans] = []

    def component_choices(q):
        src, tgt = A.at(q), B.at(q)
        pinned: dict = {}
        for r in stages:
            if r == q or r not in comps or not base.leq(q, r):
                continue
            for x in A.at(r):
                pinned_key = A.res_el(r, q, x)
                val = B.res_el(r, q, comps[r][A.at(r).index(x)])
                if pinned_key in pinned and pinned[pinned_key] != val:
                    return
                pinned[pinned_key] = val
        vals: list = []

        def ok(i, v):
            for j in range(i):
                if A.leq_at(q, src[j], src[i]) and not B.leq_at(q, vals[j], v):
                    return False
                if A.leq_at(q, src[i], src[j]) and not B.leq_at(q, v, vals[j]):
                    return False
            return True

        def rec(i):
            if i == len(src):
                yield tuple(vals)
                return
            x = src[i]
            options = [pinned[x]] if x in pinned else tgt
            for v in options:
                if ok(i, v):
                    vals.append(v)
                    yield from rec(i + 1)
                    vals.pop()

        yield from rec(0)

    def rec_stage(i):
        if i == len(stages):
            by_stage = tuple(comps[p] for p in base.stages)
            out.append(NatTrans(A, B, by_stage))
            return
        q = stages[i]
        for comp in component_choices(q):
            comps[q] = comp
            rec_stage(i + 1)
            del comps[q]

    rec_stage(0)
    return out


def image_subpresheaf(f: NatTrans, D: Subpresheaf) -> Subpresheaf:
    return Subpresheaf.make(
        f.cod, {p: {f.apply(p, x) for x in D.at(p)} for p in f.dom.base.stages}
    )


def is_continuous(f: NatTrans) -> bool:
    """Whether f preserves internal directed suprema (not automatic here)."""
    A, B = f.dom, f.cod
    for p in A.base.stages:
        for D in directed_subpresheaves_below(A, p):
            s = internal_sup(A, D, p)
            if s is None:
                continue
            t = internal_sup(B, image_subpresheaf(f, D), p)
            if t is None or f.apply(p, s) != t:
                return False
    return True


def continuous_maps(A: InternalPoset, B: InternalPoset) -> list[NatTrans]:
    return [f for f in enumerate_nat_trans(A, B) if is_continuous(f)]


# ---------------------------------------------------------------------------
# Scott-open subobjects and their classification by Omega.

def is_scott_open_subpresheaf(U: Subpresheaf) -> bool:
    """Stagewise up-closed, restriction-closed (by construction), and
    inaccessible by internal directed suprema."""
    A = U.parent
    for p in A.base.stages:
        P = A.stage_poset(p)
        for x in U.at(p):
            for y in P.up_set(x):
                if y not in U.at(p):
                    return False
    for p in A.base.stages:
        for D in directed_subpresheaves_below(A, p):
            s = internal_sup(A, D, p)
            if s is not None and s in U.at(p) and not (D.at(p) & U.at(p)):
                return False
    return True


def scott_open_subpresheaves(A: InternalPoset) -> list[Subpresheaf]:
    return [U for U in subpresheaves_below_all(A) if is_scott_open_subpresheaf(U)]


def subpresheaves_below_all(A: InternalPoset) -> list[Subpresheaf]:
    """All subpresheaves of A, with support anywhere."""
    return _subpresheaves_on(A, list(A.base.stages_desc()))


def characteristic_map(U: Subpresheaf, O: InternalPoset) -> NatTrans:
    """chi_U : A -> Omega, sending a to the sieve of stages where a lands in U."""
    A = U.parent

    def chi(p, a):
        members = frozenset(
            q for q in A.base.down_list(p) if A.res_el(p, q, a) in U.at(q)
        )
        return Sieve(A.base, p, members)

    return NatTrans.make(A, O, chi)


def subobject_classification_check(A: InternalPoset) -> bool:
    """Scott-open subpresheaves of A correspond exactly to the continuous
    maps A -> Omega via characteristic maps, with U recovered as the
    preimage of the top sieve."""
    O = omega(A.base)
    opens = scott_open_subpresheaves(A)
    chis = {characteristic_map(U, O) for U in opens}
    conts = set(continuous_maps(A, O))
    if chis != conts:
        return False
    if len(chis) != len(opens):
        return False
    for U in opens:
        chi = characteristic_map(U, O)
        for p in A.base.stages:
            top = omega_top(O, p)
            recovered = {a for a in A.at(p) if chi.apply(p, a) == top}
            if recovered != set(U.at(p)):
                return False
    return True
