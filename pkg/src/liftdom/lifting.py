"""The lifting monad, its algebras, and partial-map classification.

Everything here is generic over a backend: monad data (unit, bottom,
multiplication, strength) comes from the backend's concrete lifting
construction, while Kleisli extension, the commutator, cone-induced maps,
algebra laws, positivity and the partial-map bijection are assembled and
checked here.  Universal properties are verified by exhaustion, never
assumed.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .backend import LiftData, UnavailableError
from .order import StructureError


@dataclass
class Algebra:
    carrier: Any
    structure: Any  # LX -> X


@dataclass
class PartialMap:
    """A span A <- U -> B whose left leg is a Scott-open immersion."""

    src: Any
    tgt: Any
    members: tuple  # ((stage, frozenset), ...) canonical
    domain: Any  # the sub-object U
    incl: Any  # U -> A
    value: Any  # U -> B


def kleisli_extend(bk, f, B):
    """f-dagger = mult after the functorial image, for f : A -> LB."""
    return bk.compose(bk.mult(B), bk.lift_map(f))


def classifier(bk, A):
    """The support map LA -> Sigma, the functorial image of A -> 1.

    Classically it sends the fresh bottom to bottom and everything else to
    top; in the presheaf backend it reads off the sieve coordinate.
    """
    return bk.lift_map(bk.bang(A))


def swap_map(bk, A, B):
    pd_ab = bk.product(A, B)
    pd_ba = bk.product(B, A)
    return bk.pair(pd_ba, pd_ab.snd, pd_ab.fst)


def costrength(bk, A, B):
    """LA x B -> L(A x B), derived from the strength by swapping twice."""
    la = bk.lift(A)
    swap1 = swap_map(bk, la.obj, B)
    st_ba = bk.strength(B, A)
    swap2 = swap_map(bk, B, A)
    return bk.compose(bk.lift_map(swap2), bk.compose(st_ba, swap1))


def commutator_both(bk, A, B):
    """Both iterated-extension composites LA x LB -> L(A x B)."""
    la, lb = bk.lift(A), bk.lift(B)
    pab = bk.product(A, B)
    # extend the right argument first
    st1 = costrength(bk, A, lb.obj)  # LA x LB -> L(A x LB)
    inner1 = bk.strength(A, B)  # A x LB -> L(A x B)
    k1 = bk.compose(bk.mult(pab.obj), bk.compose(bk.lift_map(inner1), st1))
    # extend the left argument first
    st2 = bk.strength(la.obj, B)  # LA x LB -> L(LA x B)
    inner2 = costrength(bk, A, B)  # LA x B -> L(A x B)
    k2 = bk.compose(bk.mult(pab.obj), bk.compose(bk.lift_map(inner2), st2))
    return k1, k2


def commutator(bk, A, B):
    """The commutator kappa; both extension orders must agree."""
    k1, k2 = commutator_both(bk, A, B)
    if k1 != k2:
        raise StructureError("commutativity", "the two extension orders disagree")
    return k1


# ---------------------------------------------------------------------------
# Monad laws.

def functor_laws_hold(bk, A, B, C, f, g) -> bool:
    """L preserves identities and composition (f : A->B, g : B->C)."""
    la = bk.lift(A)
    if bk.lift_map(bk.identity(A)) != bk.identity(la.obj):
        return False
    return bk.lift_map(bk.compose(g, f)) == bk.compose(bk.lift_map(g), bk.lift_map(f))


def monad_laws_hold(bk, A) -> bool:
    la = bk.lift(A)
    mu = bk.mult(A)
    ident = bk.identity(la.obj)
    if bk.compose(mu, la_unit_of(bk, la)) != ident:
        return False
    if bk.compose(mu, bk.lift_map(la.unit)) != ident:
        return False
    return bk.compose(mu, bk.mult(la.obj)) == bk.compose(mu, bk.lift_map(mu))


def la_unit_of(bk, la: LiftData):
    """The unit at LA (eta indexed by the lifted object)."""
    return bk.lift(la.obj).unit


def unit_naturality_holds(bk, f) -> bool:
    la, lb = bk.lift(f.dom), bk.lift(f.cod)
    return bk.compose(bk.lift_map(f), la.unit) == bk.compose(lb.unit, f)


def mult_naturality_holds(bk, f) -> bool:
    return bk.compose(bk.lift_map(f), bk.mult(f.dom)) == bk.compose(
        bk.mult(f.cod), bk.lift_map(bk.lift_map(f))
    )


# ---------------------------------------------------------------------------
# Algebras.

def is_algebra(bk, X, alpha) -> bool:
    ld = bk.lift(X)
    if alpha.dom != ld.obj or alpha.cod != X:
        return False
    if bk.compose(alpha, ld.unit) != bk.identity(X):
        return False
    return bk.compose(alpha, bk.lift_map(alpha)) == bk.compose(alpha, bk.mult(X))


def algebra_structure(bk, X) -> Algebra | None:
    """The canonical fold (supremum of bottom plus unit preimages), or None."""
    alpha = bk.algebra_structure(X)
    if alpha is None:
        return None
    if not is_algebra(bk, X, alpha):
        raise StructureError("algebra-laws", "canonical structure fails the laws")
    return Algebra(X, alpha)


def all_algebra_structures(bk, X) -> list:
    """Exhaustive search over all candidate structure maps (uniqueness oracle)."""
    ld = bk.lift(X)
    return [alpha for alpha in bk.hom(ld.obj, X) if is_algebra(bk, X, alpha)]


def kz_check(bk, X: Algebra):
    """Structure map left adjoint to the unit: both triangle inequalities.

    Returns (ok, failures); failures carry minimal element-level witnesses.
    """
    ld = bk.lift(X.carrier)
    failures = []
    counit = bk.compose(X.structure, ld.unit)
    if counit != bk.identity(X.carrier):
        for p in bk.stages(X.carrier):
            for x in bk.at(X.carrier, p):
                if bk.app(counit, p, x) != x:
                    failures.append(("counit", p, x))
                    break
    unit_side = bk.compose(ld.unit, X.structure)
    ident = bk.identity(ld.obj)
    if not bk.hom_leq(ident, unit_side):
        for p in bk.stages(ld.obj):
            for u in bk.at(ld.obj, p):
                if not bk.leq_at(ld.obj, p, u, bk.app(unit_side, p, u)):
                    failures.append(("unit", p, u))
                    break
    return not failures, failures


def is_strict(bk, f) -> bool:
    ba = bk.bottom_point(f.dom)
    bb = bk.bottom_point(f.cod)
    if ba is None or bb is None:
        raise StructureError("pointedness", "strictness needs pointed source and target")
    return bk.compose(f, ba) == bb


def is_homomorphism(bk, f, alpha_a, alpha_b) -> bool:
    return bk.compose(alpha_b, bk.lift_map(f)) == bk.compose(f, alpha_a)


def strict_iff_hom_check(bk, f) -> bool:
    alpha_a = bk.algebra_structure(f.dom)
    alpha_b = bk.algebra_structure(f.cod)
    if alpha_a is None or alpha_b is None:
        raise StructureError("pointedness", "both objects must carry algebra structure")
    return is_strict(bk, f) == is_homomorphism(bk, f, alpha_a, alpha_b)


def strict_hom_set(bk, A, B) -> tuple:
    return tuple(f for f in bk.hom(A, B) if is_strict(bk, f))


# ---------------------------------------------------------------------------
# The Sierpinski-cone universal property and its consequences.

def scone_data(bk, A, C) -> list:
    """All lax squares (c0 : 1 -> C, c1 : A -> C with c0 . ! <= c1)."""
    bang = bk.bang(A)
    return [
        (c0, c1)
        for c0 in bk.global_elements(C)
        for c1 in bk.hom(A, C)
        if bk.hom_leq(bk.compose(c0, bang), c1)
    ]


def scone_universal_check(bk, A, C):
    """Exactly one mediating map out of LA for each lax square datum."""
    ld = bk.lift(A)
    groups: dict = {}
    for h in bk.hom(ld.obj, C):
        key = (bk.compose(h, ld.bottom), bk.compose(h, ld.unit))
        groups.setdefault(key, []).append(h)
    data = scone_data(bk, A, C)
    for c0, c1 in data:
        hs = groups.get((c0, c1), [])
        if len(hs) != 1:
            return False, ("datum", c0, c1, len(hs))
    if len(groups) != len(data):
        return False, ("non-lax-restriction", len(groups), len(data))
    return True, None


def joint_epi_check(bk, A, C):
    """Maps out of LA agree when they agree on bottom and on unit images."""
    ld = bk.lift(A)
    seen: dict = {}
    for h in bk.hom(ld.obj, C):
        key = (bk.compose(h, ld.bottom), bk.compose(h, ld.unit))
        if key in seen and seen[key] != h:
            return False, ("pair", seen[key], h)
        seen[key] = h
    return True, None


def lax_epi_check(bk, A, C):
    """Restriction along [bottom | unit] is an order-embedding on homs."""
    ld = bk.lift(A)
    homs = bk.hom(ld.obj, C)
    rests = {
        h: (bk.compose(h, ld.bottom), bk.compose(h, ld.unit)) for h in homs
    }
    for f in homs:
        for g in homs:
            restricted = bk.hom_leq(rests[f][0], rests[g][0]) and bk.hom_leq(
                rests[f][1], rests[g][1]
            )
            if restricted != bk.hom_leq(f, g):
                return False, ("pair", f, g)
    return True, None


def paths_check(bk, A, B):
    """There is at most one path between parallel maps, and one exists iff <=."""
    sigma = bk.lift(bk.terminal())
    pd = bk.product(sigma.obj, A)
    bot_leg = bk.pair(pd, bk.compose(sigma.bottom, bk.bang(A)), bk.identity(A))
    top_leg = bk.pair(pd, bk.compose(sigma.unit, bk.bang(A)), bk.identity(A))
    groups: dict = {}
    for alpha in bk.hom(pd.obj, B):
        key = (bk.compose(alpha, bot_leg), bk.compose(alpha, top_leg))
        groups.setdefault(key, []).append(alpha)
    for f in bk.hom(A, B):
        for g in bk.hom(A, B):
            n = len(groups.get((f, g), []))
            want = 1 if bk.hom_leq(f, g) else 0
            if n != want:
                return False, ("pair", f, g, n, want)
    return True, None


def arrow_object(bk, Y):
    """Pairs (y, y') with y <= y' inside Y x Y, ordered componentwise."""
    pd = bk.product(Y, Y)
    members = {
        p: frozenset(
            x
            for x in bk.at(pd.obj, p)
            if bk.leq_at(Y, p, pd.unpack(p, x)[0], pd.unpack(p, x)[1])
        )
        for p in bk.stages(Y)
    }
    sub, incl = bk.subobject(pd.obj, members)
    return sub, incl


def phoa_check(bk, Y):
    """The power of Y by the walking arrow is the exponential by Sigma."""
    sigma = bk.lift(bk.terminal())
    E = bk.exponential(sigma.obj, Y)
    arrow, _ = arrow_object(bk, Y)
    return bk.iso(E.obj, arrow) is not None


def top_opfibration_check(bk):
    """The walking-arrow power of 1 and the comma of top into Sigma are points."""
    one = bk.terminal()
    arrow_one, _ = arrow_object(bk, one)
    if bk.iso(arrow_one, one) is None:
        return False
    sigma = bk.lift(one)
    top = sigma.unit  # 1 -> Sigma picks the top truth value
    members = {
        p: frozenset(
            s
            for s in bk.at(sigma.obj, p)
            if bk.leq_at(sigma.obj, p, bk.app(top, p, "*"), s)
        )
        for p in bk.stages(sigma.obj)
    }
    comma, _ = bk.subobject(sigma.obj, members)
    return bk.iso(comma, one) is not None


# ---------------------------------------------------------------------------
# Partial maps and the partial product.

def make_partial_map(bk, A, B, members: dict, value_fn) -> PartialMap:
    if not bk_is_scott_open(bk, A, members):
        raise StructureError("scott-openness", "the domain is not a Scott-open subobject")
    sub, incl = bk.subobject(A, members)
    value = bk.mor_from_fn(sub, B, value_fn)
    canon = tuple((p, frozenset(members.get(p, ()))) for p in bk.stages(A))
    return PartialMap(A, B, canon, sub, incl, value)


def bk_is_scott_open(bk, A, members: dict) -> bool:
    return bk.is_scott_open(A, members)


def enumerate_partial_maps(bk, A, B) -> list[PartialMap]:
    out = []
    for members in bk.scott_open_subobjects(A):
        sub, incl = bk.subobject(A, members)
        canon = tuple((p, frozenset(members.get(p, ()))) for p in bk.stages(A))
        for value in bk.hom(sub, B):
            out.append(PartialMap(A, B, canon, sub, incl, value))
    return out


def partial_map_leq(bk, pm1: PartialMap, pm2: PartialMap) -> bool:
    m1, m2 = dict(pm1.members), dict(pm2.members)
    for p in bk.stages(pm1.src):
        if not m1[p] <= m2[p]:
            return False
    return all(
        bk.leq_at(
            pm1.tgt, p, bk.app(pm1.value, p, x), bk.app(pm2.value, p, x)
        )
        for p in bk.stages(pm1.src)
        for x in m1[p]
    )


def partial_to_total(bk, pm: PartialMap):
    """The classifying map A -> L(tgt) of a partial map."""
    mem = dict(pm.members)
    ld = bk.lift(pm.tgt)

    def fn(p, a):
        items = []
        for q in bk.base_down(p):
            aq = bk.res_el(pm.src, p, q, a)
            if aq in mem[q]:
                items.append((q, bk.app(pm.value, q, aq)))
        return mk_lift_elem(bk, ld, p, items)

    return bk.mor_from_fn(pm.src, ld.obj, fn)


def mk_lift_elem(bk, ld: LiftData, p, items):
    if bk.name == "classical":
        if not items:
            return ld.bot_elem(p)
        return ld.eta_elem(p, items[0][1])
    return ("lf", tuple(q for q, _ in items), tuple(v for _, v in items))


def total_to_partial(bk, f, A, B) -> PartialMap:
    """Recover the span from a map A -> LB: the domain is where f is a unit image."""
    ld = bk.lift(B)
    members = {
        p: frozenset(
            a for a in bk.at(A, p) if ld.as_eta(p, bk.app(f, p, a)) is not None
        )
        for p in bk.stages(A)
    }
    return make_partial_map(
        bk, A, B, members, lambda p, a: ld.as_eta(p, bk.app(f, p, a))
    )


def partial_product_check(bk, A, B):
    """The two translations are mutually inverse order-preserving bijections."""
    ld = bk.lift(B)
    pms = enumerate_partial_maps(bk, A, B)
    totals = [partial_to_total(bk, pm) for pm in pms]
    if len(set(totals)) != len(totals):
        return False, "classifying maps collide"
    if set(totals) != set(bk.hom(A, ld.obj)):
        return False, "classifying maps do not exhaust the hom-set"
    for pm, tot in zip(pms, totals):
        back = total_to_partial(bk, tot, A, B)
        if (back.members, back.value) != (pm.members, pm.value):
            return False, ("roundtrip", pm.members)
    for i, pm1 in enumerate(pms):
        for j, pm2 in enumerate(pms):
            if partial_map_leq(bk, pm1, pm2) != bk.hom_leq(totals[i], totals[j]):
                return False, ("order", pm1.members, pm2.members)
    return True, None


# ---------------------------------------------------------------------------
# Positivity and freeness.

def positive_elements(bk, X):
    """The positive part of an algebra carrier, as a stage-indexed subset."""
    if not bk.is_pointed(X):
        raise StructureError("pointedness", "positivity is computed on algebra carriers")
    return bk.positive_elements(X)


def free_on_positives_check(bk, X):
    """Build L(X+) and test the canonical strict extension of the inclusion.

    Returns (is_iso, the canonical map).  Raises UnavailableError if the
    positive part fails the backend's dcpo check.
    """
    members = positive_elements(bk, X)
    P, incl = bk.subobject(X, members)
    ok, witness = bk.is_dcpo(P)
    if not ok:
        raise UnavailableError("positive part is not directed-complete", witness)
    ld = bk.lift(P)
    c0 = bk.bottom_point(X)
    h = bk.scone_induced(ld, c0, incl)
    return bk.is_iso(h), h


def conservativity_check(bk, f):
    """The unit naturality square at f is a pullback, and L reflects isos."""
    A, B = f.dom, f.cod
    la, lb = bk.lift(A), bk.lift(B)
    lf = bk.lift_map(f)
    if bk.compose(lf, la.unit) != bk.compose(lb.unit, f):
        return False, "naturality square does not commute"
    for p in bk.stages(A):
        for u in bk.at(la.obj, p):
            for b in bk.at(B, p):
                if bk.app(lf, p, u) != lb.eta_elem(p, b):
                    continue
                cands = [
                    a
                    for a in bk.at(A, p)
                    if la.eta_elem(p, a) == u and bk.app(f, p, a) == b
                ]
                if len(cands) != 1:
                    return False, ("fiber", p, u, b, len(cands))
    if bk.is_iso(lf) and not bk.is_iso(f):
        return False, "functorial image is invertible but the map is not"
    return True, None
