"""Finite colimits of dcpos and of lifting algebras.

Colimits are computed from finite coproducts and a coequaliser quotient;
universal properties are then verified by exhaustion against a bounded
catalog of competing apexes.  The algebra-level constructions check, on
each instance, that the lifting functor preserves the colimit, lift the
structure map through the comparison, and verify the lifted cocone is
colimiting among algebras.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable

from .backend import UnavailableError
from .lifting import (
    algebra_structure,
    all_algebra_structures,
    is_algebra,
    is_homomorphism,
    is_strict,
    strict_hom_set,
)
from .order import StructureError


@dataclass(frozen=True)
class Diagram:
    """A finite directed multigraph with objects on nodes and maps on edges."""

    nodes: tuple
    edges: tuple  # (edge name, src node, dst node)
    objects: Any  # node -> object (dict)
    arrows: Any  # edge name -> morphism (dict)

    def __post_init__(self):
        for name, s, t in self.edges:
            if s not in self.nodes or t not in self.nodes:
                raise StructureError("membership", f"edge {name!r} leaves the node set")
            f = self.arrows[name]
            if f.dom != self.objects[s] or f.cod != self.objects[t]:
                raise StructureError("composability", f"arrow {name!r} has wrong endpoints")

    def is_connected(self) -> bool:
        if not self.nodes:
            return False
        parent = {n: n for n in self.nodes}

        def find(n):
            while parent[n] != n:
                parent[n] = parent[parent[n]]
                n = parent[n]
            return n

        for _, s, t in self.edges:
            parent[find(s)] = find(t)
        return len({find(n) for n in self.nodes}) == 1


@dataclass
class Cocone:
    diagram: Diagram
    apex: Any
    legs: Any  # node -> morphism

    def commutes(self, bk) -> bool:
        return all(
            bk.compose(self.legs[t], self.diagram.arrows[name]) == self.legs[s]
            for name, s, t in self.diagram.edges
        )


@dataclass
class ColimitResult:
    apex: Any
    legs: Any  # node -> morphism
    factor: Callable  # {node -> morphism to C} -> apex -> C


def nary_coproduct(bk, objs: list):
    """Iterated binary coproduct; returns (object, injections, cotupler)."""
    if not objs:
        empty = bk.initial()
        return empty, [], lambda fs, cod: bk.from_initial(cod)
    acc = objs[0]
    injs = [bk.identity(objs[0])]
    steps = []
    for X in objs[1:]:
        cd = bk.coproduct(acc, X)
        injs = [bk.compose(cd.inl, i) for i in injs] + [cd.inr]
        steps.append(cd)
        acc = cd.obj

    def cotupler(fs, cod):
        if len(fs) == 1:
            return fs[0]
        acc_map = fs[0]
        for cd, f in zip(steps, fs[1:]):
            acc_map = bk.cotuple(cd, acc_map, f)
        return acc_map

    return acc, injs, cotupler


def coequalizer_dcpo(bk, f, g):
    """The backend coequaliser (object and surjection)."""
    return bk.coequalizer(f, g)


def colimit(bk, d: Diagram) -> ColimitResult:
    """Colimit from coproducts plus one coequaliser, with a factorisation."""
    objs = [d.objects[n] for n in d.nodes]
    T, injs, cot = nary_coproduct(bk, objs)
    node_inj = dict(zip(d.nodes, injs))
    if not d.edges:
        legs = dict(node_inj)

        def factor0(cocone_legs, cod=None):
            fs = [cocone_legs[n] for n in d.nodes]
            if not fs:
                return bk.from_initial(cod)
            return cot(fs, fs[0].cod)

        return ColimitResult(T, legs, factor0)
    srcs = [d.objects[s] for _, s, _ in d.edges]
    _, _, ecot = nary_coproduct(bk, srcs)
    f = ecot(
        [bk.compose(node_inj[t], d.arrows[name]) for name, _, t in d.edges], T
    )
    g = ecot([node_inj[s] for _, s, _ in d.edges], T)
    coeq = bk.coequalizer(f, g)
    legs = {n: bk.compose(coeq.proj, node_inj[n]) for n in d.nodes}

    def factor(cocone_legs, cod=None):
        fs = [cocone_legs[n] for n in d.nodes]
        u = cot(fs, fs[0].cod)
        return bk.mor_from_fn(coeq.obj, fs[0].cod, lambda p, c: bk.app(u, p, c))

    return ColimitResult(coeq.obj, legs, factor)


def enumerate_cocones(bk, d: Diagram, P, leg_pool=None) -> list[dict]:
    """All commuting cocones under d with apex P, by pruned search."""
    pools = {
        n: list(leg_pool(d.objects[n], P) if leg_pool else bk.hom(d.objects[n], P))
        for n in d.nodes
    }
    out: list[dict] = []
    legs: dict = {}

    def rec(i):
        if i == len(d.nodes):
            out.append(dict(legs))
            return
        n = d.nodes[i]
        for cand in pools[n]:
            legs[n] = cand
            ok = True
            for name, s, t in d.edges:
                if s in legs and t in legs:
                    if bk.compose(legs[t], d.arrows[name]) != legs[s]:
                        ok = False
                        break
            if ok:
                rec(i + 1)
        legs.pop(n, None)

    rec(0)
    return out


def colimit_universal_check(bk, d: Diagram, res: ColimitResult, apexes) -> tuple:
    """Exactly one mediating map to every competing cocone in the catalog."""
    if not all(
        bk.compose(res.legs[t], d.arrows[name]) == res.legs[s]
        for name, s, t in d.edges
    ):
        return False, "colimit legs do not commute"
    for P in apexes:
        homs = bk.hom(res.apex, P)
        for legs in enumerate_cocones(bk, d, P):
            matching = [
                h
                for h in homs
                if all(bk.compose(h, res.legs[n]) == legs[n] for n in d.nodes)
            ]
            if len(matching) != 1:
                return False, ("cocone", P, len(matching))
    return True, None


def colimits_enriched_check(bk, d: Diagram, res: ColimitResult, apexes) -> tuple:
    """If two mediating comparisons agree laxly after the legs, they agree laxly."""
    for P in apexes:
        homs = bk.hom(res.apex, P)
        for u in homs:
            for v in homs:
                after = all(
                    bk.hom_leq(
                        bk.compose(u, res.legs[n]), bk.compose(v, res.legs[n])
                    )
                    for n in d.nodes
                )
                if after != bk.hom_leq(u, v):
                    return False, ("pair", P, u, v)
    return True, None


def lift_diagram(bk, d: Diagram) -> Diagram:
    objects = {n: bk.lift(d.objects[n]).obj for n in d.nodes}
    arrows = {name: bk.lift_map(d.arrows[name]) for name, _, _ in d.edges}
    return Diagram(d.nodes, d.edges, objects, arrows)


def lift_algebra_to_colimit(bk, d: Diagram):
    """Lift the underlying colimit of a connected algebra diagram.

    Returns (result, beta, comparison): the underlying colimit, the induced
    structure map on its apex, and the iso witnessing that lifting
    preserves the colimit.
    """
    if not d.is_connected():
        raise StructureError("connectedness", "use the coproduct construction instead")
    alphas = {}
    for n in d.nodes:
        alg = algebra_structure(bk, d.objects[n])
        if alg is None:
            raise StructureError("pointedness", f"node {n!r} carries no algebra structure")
        alphas[n] = alg.structure
    res = colimit(bk, d)
    ld = lift_diagram(bk, d)
    res_l = colimit(bk, ld)
    comparison = res_l.factor({n: bk.lift_map(res.legs[n]) for n in d.nodes})
    inv = bk.inverse(comparison)
    if inv is None:
        raise UnavailableError("lifting does not preserve this colimit", None)
    beta_on_l = res_l.factor({n: bk.compose(res.legs[n], alphas[n]) for n in d.nodes})
    beta = bk.compose(beta_on_l, inv)
    if not is_algebra(bk, res.apex, beta):
        raise StructureError("algebra-laws", "the induced structure map fails the laws")
    for n in d.nodes:
        if not is_homomorphism(bk, res.legs[n], alphas[n], beta):
            raise StructureError("homomorphism", f"leg at {n!r} fails to be linear")
    return res, beta, comparison


def creation_check(bk, d: Diagram, apexes) -> tuple:
    """The forgetful functor creates this connected colimit.

    Checks: the lifted structure exists, is the unique algebra structure on
    the apex, and the algebra cocone is colimiting among algebras in the
    catalog (strict legs, strict mediating maps, by exhaustion).
    """
    if not d.is_connected():
        return False, "diagram is not connected"
    try:
        res, beta, _ = lift_algebra_to_colimit(bk, d)
    except (StructureError, UnavailableError) as e:
        return False, f"lifting failed: {e}"
    structures = all_algebra_structures(bk, res.apex)
    if structures != [beta]:
        return False, ("structure not unique", len(structures))
    pointed_apexes = [P for P in apexes if bk.is_pointed(P)]
    for P in pointed_apexes:
        shoms = strict_hom_set(bk, res.apex, P)
        for legs in enumerate_cocones(
            bk, d, P, leg_pool=lambda X, C: strict_hom_set(bk, X, C)
        ):
            matching = [
                h
                for h in shoms
                if all(bk.compose(h, res.legs[n]) == legs[n] for n in d.nodes)
            ]
            if len(matching) != 1:
                return False, ("algebra cocone", P, len(matching))
    return True, None


def coproduct_algebras(bk, X, Y):
    """Coproduct of algebras by the standard reflexive coequaliser.

    Returns (Q, beta, inj_x, inj_y).
    """
    ax, ay = bk.algebra_structure(X), bk.algebra_structure(Y)
    if ax is None or ay is None:
        raise StructureError("pointedness", "coproduct of algebras needs pointed inputs")
    lx, ly = bk.lift(X), bk.lift(Y)
    cd = bk.coproduct(X, Y)
    lcd = bk.coproduct(lx.obj, ly.obj)
    l_of_sum = bk.lift(cd.obj)
    # leg (a): L of the cotupled structure maps
    fold = bk.cotuple(lcd, bk.compose(cd.inl, ax), bk.compose(cd.inr, ay))
    leg_a = bk.lift_map(fold)
    # leg (b): multiplication after L of the cotupled lifted inclusions
    incls = bk.cotuple(lcd, bk.lift_map(cd.inl), bk.lift_map(cd.inr))
    leg_b = bk.compose(bk.mult(cd.obj), bk.lift_map(incls))
    # common section: L of the unit placed on each summand
    section = bk.lift_map(
        bk.cotuple(cd, bk.compose(lcd.inl, lx.unit), bk.compose(lcd.inr, ly.unit))
    )
    if bk.compose(leg_a, section) != bk.identity(l_of_sum.obj):
        raise StructureError("reflexivity", "section fails the first leg")
    if bk.compose(leg_b, section) != bk.identity(l_of_sum.obj):
        raise StructureError("reflexivity", "section fails the second leg")
    coeq = bk.coequalizer(leg_a, leg_b)
    alg = algebra_structure(bk, coeq.obj)
    if alg is None:
        raise StructureError("pointedness", "coequaliser apex lost its bottom")
    inj_x = bk.compose(coeq.proj, bk.compose(l_of_sum.unit, cd.inl))
    inj_y = bk.compose(coeq.proj, bk.compose(l_of_sum.unit, cd.inr))
    for inj, a in ((inj_x, ax), (inj_y, ay)):
        if not is_homomorphism(bk, inj, a, alg.structure):
            raise StructureError("homomorphism", "coproduct injection is not linear")
    return coeq.obj, alg.structure, inj_x, inj_y


def coproduct_algebras_universal_check(bk, X, Y, apexes) -> tuple:
    """Pairs of strict maps out of X and Y correspond to strict maps out of
    the coproduct, uniquely, for every pointed apex in the catalog."""
    Q, beta, inj_x, inj_y = coproduct_algebras(bk, X, Y)
    for P in apexes:
        if not bk.is_pointed(P):
            continue
        shoms = strict_hom_set(bk, Q, P)
        for f in strict_hom_set(bk, X, P):
            for g in strict_hom_set(bk, Y, P):
                matching = [
                    h
                    for h in shoms
                    if bk.compose(h, inj_x) == f and bk.compose(h, inj_y) == g
                ]
                if len(matching) != 1:
                    return False, ("pair", P, len(matching))
    return True, (Q, inj_x, inj_y)
