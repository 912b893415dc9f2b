"""The two enumerable backends behind one categorical surface.

A backend packages a locally-posetal category with enough structure for
every check in this package: finite products and coproducts, hom-set
enumeration with its pointwise order, iso search, quotients, exponentials,
and the lifting construction with its unit, bottom, multiplication and
strength.  The classical backend is finite posets with monotone maps
(= finite dcpos); the presheaf backend is internal dcpos in presheaves
over a finite base poset, with internally Scott-continuous maps.

Generic element-level code addresses both through the same stage API:
the classical backend has the single stage ``None``.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct
from typing import Any, Callable

from . import presheaf as ps
from .order import (
    FinPoset,
    MonotoneMap,
    StructureError,
    compose,
    enumerate_monotone_maps,
    map_leq,
    poset_iso,
    quotient_poset,
)


class UnavailableError(Exception):
    """A construction the backend refuses to guess at; carries the reason."""

    def __init__(self, reason: str, witness=None):
        super().__init__(reason)
        self.reason = reason
        self.witness = witness


@dataclass
class ProductData:
    obj: Any
    fst: Any
    snd: Any
    pack: Callable  # (stage, a, b) -> element
    unpack: Callable  # (stage, x) -> (a, b)


@dataclass
class CoproductData:
    obj: Any
    inl: Any
    inr: Any
    mk_l: Callable
    mk_r: Callable
    unpack: Callable  # (stage, x) -> ("l", a) or ("r", b)


@dataclass
class LiftData:
    obj: Any
    unit: Any  # A -> LA
    bottom: Any  # 1 -> LA
    is_bot: Callable  # (stage, u) -> bool
    as_eta: Callable  # (stage, u) -> a or None
    eta_elem: Callable  # (stage, a) -> u
    bot_elem: Callable  # (stage,) -> u


@dataclass
class CoeqData:
    obj: Any
    proj: Any  # B -> Q; Q's elements are representatives of B's elements


@dataclass
class ExpData:
    obj: Any
    apply_elem: Callable  # (stage, fn-element, stage' <= stage, a) -> b
    encode: Callable  # (stage, {stage' -> {a -> b}}) -> fn-element



class _ConstructionCache:
    """Memoised object constructions; structural equality makes hits cheap."""

    def memo(self, key, thunk):
        if key not in self._memo:
            self._memo[key] = thunk()
        return self._memo[key]

    def product(self, A, B) -> ProductData:
        return self.memo(("product", A, B), lambda: self._product(A, B))

    def coproduct(self, A, B) -> CoproductData:
        return self.memo(("coproduct", A, B), lambda: self._coproduct(A, B))

    def lift(self, A) -> LiftData:
        return self.memo(("lift", A), lambda: self._lift(A))

    def mult(self, A):
        return self.memo(("mult", A), lambda: self._mult(A))

    def strength(self, A, B):
        return self.memo(("strength", A, B), lambda: self._strength(A, B))

    def algebra_structure(self, A):
        return self.memo(("algebra", A), lambda: self._algebra_structure(A))

    def exponential(self, A, B) -> ExpData:
        return self.memo(("exp", A, B), lambda: self._exponential(A, B))


class ClassicalBackend(_ConstructionCache):
    """Finite posets and monotone maps; every finite poset is a dcpo."""

    name = "classical"

    def __init__(self):
        self._hom_cache: dict = {}
        self._memo: dict = {}

    def __eq__(self, other):
        return isinstance(other, ClassicalBackend)

    def __hash__(self):
        return hash("classical")

    # -- stage API ----------------------------------------------------------
    def stages(self, A) -> tuple:
        return (None,)

    def base_down(self, p) -> tuple:
        return (None,)

    def at(self, A, stage) -> tuple:
        return A.elements

    def leq_at(self, A, stage, x, y) -> bool:
        return A.leq(x, y)

    def res_el(self, A, p, q, x):
        return x

    def app(self, f, stage, x):
        return f(x)

    def size(self, A) -> int:
        return A.n

    # -- category -----------------------------------------------------------
    def identity(self, A):
        return MonotoneMap.identity(A)

    def compose(self, g, f):
        return compose(g, f)

    def mor_from_fn(self, A, B, fn):
        return MonotoneMap.make(A, B, lambda x: fn(None, x))

    def terminal(self):
        return FinPoset(("*",), frozenset([("*", "*")]))

    def initial(self):
        return FinPoset((), frozenset())

    def bang(self, A):
        return MonotoneMap.make(A, self.terminal(), lambda _: "*")

    def from_initial(self, A):
        return MonotoneMap(self.initial(), A, ())

    def _product(self, A, B) -> ProductData:
        els = tuple(("pr", a, b) for a in A.elements for b in B.elements)
        pairs = frozenset(
            (x, y)
            for x in els
            for y in els
            if A.leq(x[1], y[1]) and B.leq(x[2], y[2])
        )
        P = FinPoset(els, pairs)
        fst = MonotoneMap.make(P, A, lambda x: x[1])
        snd = MonotoneMap.make(P, B, lambda x: x[2])
        return ProductData(
            P,
            fst,
            snd,
            lambda st, a, b: ("pr", a, b),
            lambda st, x: (x[1], x[2]),
        )

    def pair(self, pd: ProductData, f, g):
        return MonotoneMap.make(f.dom, pd.obj, lambda x: ("pr", f(x), g(x)))

    def _coproduct(self, A, B) -> CoproductData:
        els = tuple(("in", 0, a) for a in A.elements) + tuple(
            ("in", 1, b) for b in B.elements
        )
        pairs = frozenset(
            (x, y)
            for x in els
            for y in els
            if x[1] == y[1] and (A if x[1] == 0 else B).leq(x[2], y[2])
        )
        C = FinPoset(els, pairs)
        inl = MonotoneMap.make(A, C, lambda a: ("in", 0, a))
        inr = MonotoneMap.make(B, C, lambda b: ("in", 1, b))
        return CoproductData(
            C,
            inl,
            inr,
            lambda st, a: ("in", 0, a),
            lambda st, b: ("in", 1, b),
            lambda st, x: ("l", x[2]) if x[1] == 0 else ("r", x[2]),
        )

    def cotuple(self, cd: CoproductData, f, g):
        return MonotoneMap.make(
            cd.obj, f.cod, lambda x: f(x[2]) if x[1] == 0 else g(x[2])
        )

    def hom(self, A, B) -> tuple:
        key = (A, B)
        if key not in self._hom_cache:
            self._hom_cache[key] = tuple(enumerate_monotone_maps(A, B))
        return self._hom_cache[key]

    def hom_leq(self, f, g) -> bool:
        return map_leq(f, g)

    def global_elements(self, A) -> tuple:
        return self.hom(self.terminal(), A)

    def inverse(self, f):
        if len(set(f.values)) != f.dom.n or f.dom.n != f.cod.n:
            return None
        back = {v: x for x, v in zip(f.dom.elements, f.values)}
        try:
            return MonotoneMap.make(f.cod, f.dom, back)
        except StructureError:
            return None

    def is_iso(self, f) -> bool:
        return self.inverse(f) is not None

    def iso(self, A, B):
        return poset_iso(A, B)

    def is_dcpo(self, A):
        return True, None

    # -- pointedness and subobjects ------------------------------------------
    def is_pointed(self, A) -> bool:
        return A.is_pointed()

    def bottom_point(self, A):
        b = A.bottom()
        if b is None:
            return None
        return MonotoneMap.make(self.terminal(), A, lambda _: b)

    def subobject(self, A, members: dict):
        sub = A.restrict(members[None])
        incl = MonotoneMap.make(sub, A, lambda x: x)
        return sub, incl

    def scott_open_subobjects(self, A) -> list[dict]:
        from .order import scott_opens

        return [{None: frozenset(S.members)} for S in scott_opens(A)]

    def is_scott_open(self, A, members: dict) -> bool:
        from .order import is_up_closed

        return is_up_closed(A, members[None])

    # -- lifting -------------------------------------------------------------
    def fresh_bottom_label(self, A):
        label = "⊥"
        while label in A._index:
            label += "'"
        return label

    def _lift(self, A) -> LiftData:
        bot = self.fresh_bottom_label(A)
        els = (bot,) + A.elements
        pairs = frozenset(A.pairs) | {(bot, e) for e in els}
        LA = FinPoset(els, pairs)
        unit = MonotoneMap.make(A, LA, lambda a: a)
        bottom = MonotoneMap.make(self.terminal(), LA, lambda _: bot)
        return LiftData(
            LA,
            unit,
            bottom,
            lambda st, u: u == bot,
            lambda st, u: None if u == bot else u,
            lambda st, a: a,
            lambda st: bot,
        )

    def lift_map(self, f):
        la, lb = self.lift(f.dom), self.lift(f.cod)
        return MonotoneMap.make(
            la.obj, lb.obj, lambda u: lb.bot_elem(None) if la.is_bot(None, u) else f(u)
        )

    def _mult(self, A):
        la = self.lift(A)
        lla = self.lift(la.obj)
        return MonotoneMap.make(
            lla.obj,
            la.obj,
            lambda u: la.bot_elem(None) if lla.is_bot(None, u) else u,
        )

    def _strength(self, A, B):
        lb = self.lift(B)
        pd = self.product(A, lb.obj)
        pab = self.product(A, B)
        lab = self.lift(pab.obj)

        def st(stage, x):
            a, u = pd.unpack(stage, x)
            if lb.is_bot(stage, u):
                return lab.bot_elem(stage)
            return pab.pack(stage, a, u)

        return self.mor_from_fn(pd.obj, lab.obj, st)

    def _algebra_structure(self, A):
        if not A.is_pointed():
            return None
        la = self.lift(A)
        b = A.bottom()
        return MonotoneMap.make(
            la.obj, A, lambda u: b if la.is_bot(None, u) else u
        )

    def scone_induced(self, ld: LiftData, c0, c1):
        """The unique map LA -> C with h(bot) = c0 and h(eta a) = c1 a."""
        A = c1.dom
        C = c1.cod
        if not map_leq(compose(c0, self.bang(A)), c1):
            raise StructureError("laxness", "bottom leg must sit below the top leg")
        base = c0("*")
        return MonotoneMap.make(
            ld.obj, C, lambda u: base if ld.is_bot(None, u) else c1(u)
        )

    def positive_elements(self, A) -> dict:
        """Elements whose domination forces inhabitation of semidirected sets."""
        from .order import Subset, is_semidirected, lub, subsets

        out = set()
        for x in A.elements:
            ok = True
            for S in subsets(A):
                if not is_semidirected(A, S):
                    continue
                v = lub(A, S)
                if v is None or not A.leq(x, v):
                    continue
                if not S.members:
                    ok = False
                    break
            if ok:
                out.add(x)
        return {None: frozenset(out)}

    def coequalizer(self, f, g) -> CoeqData:
        if f.dom != g.dom or f.cod != g.cod:
            raise StructureError("composability", "maps are not parallel")
        B = f.cod
        Q, assign = quotient_poset(B, [(f(x), g(x)) for x in f.dom.elements])
        proj = MonotoneMap.make(B, Q, lambda x: assign[x])
        return CoeqData(Q, proj)

    def _exponential(self, A, B) -> ExpData:
        from .order import hom_poset

        E, by_el = hom_poset(A, B)
        mors = {el: m for el, m in by_el.items()}

        def apply_elem(stage, fe, stage2, a):
            return mors[fe](a)

        def encode(stage, comps: dict):
            mapping = comps[None]
            return ("fn",) + tuple(mapping[a] for a in A.elements)

        return ExpData(E, apply_elem, encode)


@dataclass(frozen=True)
class PresheafBackend(_ConstructionCache):
    """Internal dcpos over a finite base poset, with continuous maps."""

    base: ps.BasePoset
    name = "presheaf"

    def __post_init__(self):
        object.__setattr__(self, "_hom_cache", {})
        object.__setattr__(self, "_memo", {})

    # -- stage API ----------------------------------------------------------
    def stages(self, A) -> tuple:
        return self.base.stages

    def base_down(self, p) -> tuple:
        return self.base.down_list(p)

    def at(self, A, stage) -> tuple:
        return A.at(stage)

    def leq_at(self, A, stage, x, y) -> bool:
        return A.leq_at(stage, x, y)

    def res_el(self, A, p, q, x):
        return A.res_el(p, q, x)

    def app(self, f, stage, x):
        return f.apply(stage, x)

    def size(self, A) -> int:
        return A.size()

    # -- category -----------------------------------------------------------
    def identity(self, A):
        return ps.NatTrans.identity(A)

    def compose(self, g, f):
        return ps.nt_compose(g, f)

    def mor_from_fn(self, A, B, fn):
        return ps.NatTrans.make(A, B, fn)

    def terminal(self):
        return ps.InternalPoset.constant(self.base, FinPoset(("*",), frozenset([("*", "*")])))

    def initial(self):
        return ps.InternalPoset.constant(self.base, FinPoset((), frozenset()))

    def bang(self, A):
        return ps.NatTrans.make(A, self.terminal(), lambda p, x: "*")

    def from_initial(self, A):
        return ps.NatTrans.make(self.initial(), A, lambda p, x: x)

    def _product(self, A, B) -> ProductData:
        base = self.base
        sets = {
            p: tuple(("pr", a, b) for a in A.at(p) for b in B.at(p))
            for p in base.stages
        }
        res = {
            (p, q): {
                x: ("pr", A.res_el(p, q, x[1]), B.res_el(p, q, x[2]))
                for x in sets[p]
            }
            for p, q in base.strict_pairs()
        }
        orders = {
            p: {
                (x, y)
                for x in sets[p]
                for y in sets[p]
                if A.leq_at(p, x[1], y[1]) and B.leq_at(p, x[2], y[2])
            }
            for p in base.stages
        }
        P = ps.InternalPoset.make(base, sets, res, orders)
        fst = ps.NatTrans.make(P, A, lambda p, x: x[1])
        snd = ps.NatTrans.make(P, B, lambda p, x: x[2])
        return ProductData(
            P,
            fst,
            snd,
            lambda st, a, b: ("pr", a, b),
            lambda st, x: (x[1], x[2]),
        )

    def pair(self, pd: ProductData, f, g):
        return ps.NatTrans.make(
            f.dom, pd.obj, lambda p, x: ("pr", f.apply(p, x), g.apply(p, x))
        )

    def _coproduct(self, A, B) -> CoproductData:
        base = self.base
        sets = {
            p: tuple(("in", 0, a) for a in A.at(p)) + tuple(("in", 1, b) for b in B.at(p))
            for p in base.stages
        }
        res = {
            (p, q): {
                x: ("in", x[1], (A if x[1] == 0 else B).res_el(p, q, x[2]))
                for x in sets[p]
            }
            for p, q in base.strict_pairs()
        }
        orders = {
            p: {
                (x, y)
                for x in sets[p]
                for y in sets[p]
                if x[1] == y[1] and (A if x[1] == 0 else B).leq_at(p, x[2], y[2])
            }
            for p in base.stages
        }
        C = ps.InternalPoset.make(base, sets, res, orders)
        inl = ps.NatTrans.make(A, C, lambda p, a: ("in", 0, a))
        inr = ps.NatTrans.make(B, C, lambda p, b: ("in", 1, b))
        return CoproductData(
            C,
            inl,
            inr,
            lambda st, a: ("in", 0, a),
            lambda st, b: ("in", 1, b),
            lambda st, x: ("l", x[2]) if x[1] == 0 else ("r", x[2]),
        )

    def cotuple(self, cd: CoproductData, f, g):
        return ps.NatTrans.make(
            cd.obj,
            f.cod,
            lambda p, x: f.apply(p, x[2]) if x[1] == 0 else g.apply(p, x[2]),
        )

    def hom(self, A, B) -> tuple:
        key = (A, B)
        if key not in self._hom_cache:
            self._hom_cache[key] = tuple(ps.continuous_maps(A, B))
        return self._hom_cache[key]

    def hom_leq(self, f, g) -> bool:
        return ps.nt_leq(f, g)

    def global_elements(self, A) -> tuple:
        return self.hom(self.terminal(), A)

    def inverse(self, f):
        A, B = f.dom, f.cod
        comps = {}
        for p in self.base.stages:
            if len(set(f.components[self.base.poset.index(p)])) != len(A.at(p)) or len(
                A.at(p)
            ) != len(B.at(p)):
                return None
            comps[p] = {f.apply(p, x): x for x in A.at(p)}
        try:
            g = ps.NatTrans.make(B, A, lambda p, y: comps[p][y])
        except StructureError:
            return None
        if not ps.is_continuous(g):
            return None
        return g

    def is_iso(self, f) -> bool:
        return self.inverse(f) is not None

    def iso(self, A, B):
        """A natural stagewise order-iso pair, or None (first in search order)."""
        base = self.base
        stages = base.stages_desc()
        for p in base.stages:
            if len(A.at(p)) != len(B.at(p)):
                return None
        assign: dict = {}

        def stage_key(q, x):
            P = A.stage_poset(q)
            return (len(P.down_set(x)), len(P.up_set(x)))

        def stage_key_b(q, y):
            P = B.stage_poset(q)
            return (len(P.down_set(y)), len(P.up_set(y)))

        def rec_stage(i):
            if i == len(stages):
                return True
            q = stages[i]
            pinned = {}
            for r in stages[:i]:
                if not base.leq(q, r):
                    continue
                for x in A.at(r):
                    key = A.res_el(r, q, x)
                    val = B.res_el(r, q, assign[(r, x)])
                    if pinned.get(key, val) != val:
                        return False
                    pinned[key] = val
            src = A.at(q)
            used: set = set()

            def rec_el(j):
                if j == len(src):
                    return rec_stage(i + 1)
                x = src[j]
                options = [pinned[x]] if x in pinned else [
                    y for y in B.at(q) if stage_key(q, x) == stage_key_b(q, y)
                ]
                for y in options:
                    if y in used:
                        continue
                    if any(
                        A.leq_at(q, x, z) != B.leq_at(q, y, assign[(q, z)])
                        or A.leq_at(q, z, x) != B.leq_at(q, assign[(q, z)], y)
                        for z in src[:j]
                    ):
                        continue
                    assign[(q, x)] = y
                    used.add(y)
                    if rec_el(j + 1):
                        return True
                    del assign[(q, x)]
                    used.remove(y)
                return False

            return rec_el(0)

        if not rec_stage(0):
            return None
        fwd = ps.NatTrans.make(A, B, lambda p, x: assign[(p, x)])
        back = self.inverse(fwd)
        return fwd, back

    def is_dcpo(self, A):
        return ps.is_internal_dcpo(A)

    # -- pointedness and subobjects ------------------------------------------
    def is_pointed(self, A) -> bool:
        return ps.is_internal_pointed(A)

    def bottom_point(self, A):
        fam = ps.internal_bottom(A)
        if fam is None:
            return None
        return ps.NatTrans.make(self.terminal(), A, lambda p, _: fam[p])

    def subobject(self, A, members: dict):
        D = ps.Subpresheaf.make(A, members)
        return ps.sub_internal_poset(D)

    def scott_open_subobjects(self, A) -> list[dict]:
        return [
            {p: U.at(p) for p in self.base.stages}
            for U in ps.scott_open_subpresheaves(A)
        ]

    def is_scott_open(self, A, members: dict) -> bool:
        try:
            U = ps.Subpresheaf.make(A, members)
        except StructureError:
            return False
        return ps.is_scott_open_subpresheaf(U)

    # -- lifting -------------------------------------------------------------
    def _families(self, A, S: tuple):
        if not S:
            yield ()
            return
        for combo in iproduct(*(A.at(q) for q in S)):
            ok = True
            for i, q in enumerate(S):
                for j, r in enumerate(S):
                    if r != q and self.base.leq(r, q):
                        if A.res_el(q, r, combo[i]) != combo[j]:
                            ok = False
                            break
                if not ok:
                    break
            if ok:
                yield combo

    def _lift(self, A) -> LiftData:
        base = self.base
        sets = {}
        for p in base.stages:
            down = base.down_list(p)
            els = []
            for mask in range(1 << len(down)):
                S = tuple(down[i] for i in range(len(down)) if mask >> i & 1)
                if not all(
                    r in S for q in S for r in base.down_list(q)
                ):
                    continue
                for fam in self._families(A, S):
                    els.append(("lf", S, fam))
            sets[p] = tuple(els)

        def res_one(p, q, x):
            _, S, fam = x
            downq = set(base.down_list(q))
            keep = [i for i, r in enumerate(S) if r in downq]
            return ("lf", tuple(S[i] for i in keep), tuple(fam[i] for i in keep))

        res = {
            (p, q): {x: res_one(p, q, x) for x in sets[p]}
            for p, q in base.strict_pairs()
        }

        def le(p, x, y):
            _, S, fam = x
            _, T, gam = y
            if not set(S) <= set(T):
                return False
            pos = {r: i for i, r in enumerate(T)}
            return all(A.leq_at(r, fam[i], gam[pos[r]]) for i, r in enumerate(S))

        orders = {
            p: {(x, y) for x in sets[p] for y in sets[p] if le(p, x, y)}
            for p in base.stages
        }
        LA = ps.InternalPoset.make(base, sets, res, orders)

        def eta_elem(p, a):
            down = base.down_list(p)
            return ("lf", down, tuple(A.res_el(p, q, a) for q in down))

        unit = ps.NatTrans.make(A, LA, eta_elem)
        bottom = ps.NatTrans.make(self.terminal(), LA, lambda p, _: ("lf", (), ()))

        def as_eta(p, u):
            _, S, fam = u
            down = base.down_list(p)
            if S != down:
                return None
            return fam[S.index(p)]

        return LiftData(
            LA,
            unit,
            bottom,
            lambda st, u: u[1] == (),
            as_eta,
            eta_elem,
            lambda st: ("lf", (), ()),
        )

    def lift_map(self, f):
        la, lb = self.lift(f.dom), self.lift(f.cod)
        return ps.NatTrans.make(
            la.obj,
            lb.obj,
            lambda p, u: ("lf", u[1], tuple(f.apply(q, v) for q, v in zip(u[1], u[2]))),
        )

    def _mult(self, A):
        la = self.lift(A)
        lla = self.lift(la.obj)

        def mu(p, w):
            _, S, fams = w
            T, vals = [], []
            for i, r in enumerate(S):
                inner = fams[i]  # an element of LA at stage r
                _, Sr, famr = inner
                if r in Sr:
                    T.append(r)
                    vals.append(famr[Sr.index(r)])
            return ("lf", tuple(T), tuple(vals))

        return ps.NatTrans.make(lla.obj, la.obj, mu)

    def _strength(self, A, B):
        lb = self.lift(B)
        pd = self.product(A, lb.obj)
        pab = self.product(A, B)
        lab = self.lift(pab.obj)

        def st(p, x):
            a, u = pd.unpack(p, x)
            _, T, fam = u
            return (
                "lf",
                T,
                tuple(("pr", A.res_el(p, q, a), fam[i]) for i, q in enumerate(T)),
            )

        return ps.NatTrans.make(pd.obj, lab.obj, st)

    def _algebra_structure(self, A):
        if not self.is_pointed(A):
            return None
        ok, _ = ps.is_internal_dcpo(A)
        if not ok:
            return None
        la = self.lift(A)
        bot = ps.internal_bottom(A)

        def alpha(p, u):
            _, S, fam = u
            members = {q: {bot[q]} for q in self.base.stages if self.base.leq(q, p)}
            for i, q in enumerate(S):
                members[q] = members[q] | {fam[i]}
            D = ps.Subpresheaf.make(A, members)
            s = ps.internal_sup(A, D, p)
            if s is None:
                raise UnavailableError("no internal supremum for an algebra fold", (p, u))
            return s

        return ps.NatTrans.make(la.obj, A, alpha)

    def scone_induced(self, ld: LiftData, c0, c1):
        A = c1.dom
        C = c1.cod
        if not ps.nt_leq(self.compose(c0, self.bang(A)), c1):
            raise StructureError("laxness", "bottom leg must sit below the top leg")
        ok, w = ps.is_internal_dcpo(C)
        if not ok:
            raise UnavailableError("cone codomain is not an internal dcpo", w)

        def h(p, u):
            _, S, fam = u
            members = {
                q: {c0.apply(q, "*")} for q in self.base.stages if self.base.leq(q, p)
            }
            for i, q in enumerate(S):
                members[q] = members[q] | {c1.apply(q, fam[i])}
            D = ps.Subpresheaf.make(C, members)
            s = ps.internal_sup(C, D, p)
            if s is None:
                raise UnavailableError("no internal supremum for induced cone map", (p, u))
            return s

        return ps.NatTrans.make(ld.obj, C, h)

    def positive_elements(self, A) -> dict:
        pos = ps.positive_members(A)
        return {p: pos.at(p) for p in self.base.stages}

    def coequalizer(self, f, g) -> CoeqData:
        if f.dom != g.dom or f.cod != g.cod:
            raise StructureError("composability", "maps are not parallel")
        B = f.cod
        base = self.base
        stage_data = {}
        for p in base.stages:
            seeds = [(f.apply(p, x), g.apply(p, x)) for x in f.dom.at(p)]
            stage_data[p] = quotient_poset(B.stage_poset(p), seeds)
        sets = {p: stage_data[p][0].elements for p in base.stages}
        res = {}
        for p, q in base.strict_pairs():
            assign_q = stage_data[q][1]
            mapping = {}
            for rep in sets[p]:
                # every member of the class must restrict into one class
                images = {
                    assign_q[B.res_el(p, q, x)]
                    for x in B.at(p)
                    if stage_data[p][1][x] == rep
                }
                if len(images) != 1:
                    raise UnavailableError(
                        "stagewise quotient classes do not restrict coherently",
                        (p, q, rep),
                    )
                mapping[rep] = next(iter(images))
            res[(p, q)] = mapping
        orders = {p: stage_data[p][0].pairs for p in base.stages}
        Q = ps.InternalPoset.make(base, sets, res, orders)
        ok, witness = ps.is_internal_dcpo(Q)
        if not ok:
            raise UnavailableError(
                "stagewise quotient is not an internal dcpo", witness
            )
        proj = ps.NatTrans.make(B, Q, lambda p, x: stage_data[p][1][x])
        if not ps.is_continuous(proj):
            raise UnavailableError("stagewise quotient projection is not continuous", None)
        return CoeqData(Q, proj)

    def _exponential(self, A, B) -> ExpData:
        base = self.base
        restricted = {}
        for p in base.stages:
            sub_base, Ap = ps.restrict_to(A, p)
            _, Bp = ps.restrict_to(B, p)
            maps = ps.continuous_maps(Ap, Bp)
            restricted[p] = (sub_base, Ap, Bp, maps)

        def encode_nt(p, nt):
            sub_base = restricted[p][0]
            return ("fn",) + tuple(
                (q,) + tuple(nt.apply(q, x) for x in A.at(q))
                for q in sub_base.stages
            )

        sets = {
            p: tuple(encode_nt(p, nt) for nt in restricted[p][3]) for p in base.stages
        }

        def decode(p, fe) -> dict:
            comp = {}
            for entry in fe[1:]:
                q, vals = entry[0], entry[1:]
                comp[q] = dict(zip(A.at(q), vals))
            return comp

        res = {}
        for p, q in base.strict_pairs():
            downq = set(base.down_list(q))
            mapping = {}
            for fe in sets[p]:
                kept = ("fn",) + tuple(e for e in fe[1:] if e[0] in downq)
                mapping[fe] = kept
            res[(p, q)] = mapping

        def le(p, x, y):
            cx, cy = decode(p, x), decode(p, y)
            return all(
                B.leq_at(q, cx[q][a], cy[q][a]) for q in cx for a in cx[q]
            )

        orders = {
            p: {(x, y) for x in sets[p] for y in sets[p] if le(p, x, y)}
            for p in base.stages
        }
        E = ps.InternalPoset.make(base, sets, res, orders)

        def apply_elem(stage, fe, stage2, a):
            return decode(stage, fe)[stage2][a]

        def encode(stage, comps: dict):
            sub_base = restricted[stage][0]
            fe = ("fn",) + tuple(
                (q,) + tuple(comps[q][x] for x in A.at(q)) for q in sub_base.stages
            )
            if fe not in set(sets[stage]):
                raise UnavailableError(
                    "encoded function element is not continuous", (stage, fe)
                )
            return fe

        return ExpData(E, apply_elem, encode)


def classical() -> ClassicalBackend:
    return ClassicalBackend()


def presheaf_backend(base: ps.BasePoset) -> PresheafBackend:
    return PresheafBackend(base)


def sierpinski_base() -> ps.BasePoset:
    return ps.BasePoset(FinPoset.from_generators(("s0", "s1"), [("s0", "s1")]))
