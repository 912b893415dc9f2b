"""The named law suite: registry, runners, and negative controls.

Each law is data: a name, a one-line statement of the claim it checks, the
default bounds it runs at, a runner producing per-instance results over
the model plus generated families, and a negative control that corrupts
exactly one ingredient and must make the same verification fail with an
element-level witness.  CLI help and docs are generated from this table.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, replace
from typing import Callable

from . import colimits as co
from . import lifting as li
from . import tensor as te
from .backend import ClassicalBackend, LiftData, PresheafBackend, UnavailableError
from .model import ModelSpec, default_model
from .order import (
    FinPoset,
    MonotoneMap,
    StructureError,
    Subset,
    is_semidirected,
    lub,
    posets_upto,
    semidirected_subsets,
)
from .presheaf import BasePoset, InternalPoset, omega, subobject_classification_check
from .report import FAIL, PASS, UNAVAILABLE, CheckReport, InstanceReport, fmt, make_report

CL = ClassicalBackend()
_PS_CACHE: dict = {}


def presheaf_for(base: BasePoset) -> PresheafBackend:
    if base not in _PS_CACHE:
        _PS_CACHE[base] = PresheafBackend(base)
    return _PS_CACHE[base]


def sierpinski_backend() -> PresheafBackend:
    return presheaf_for(
        BasePoset(FinPoset.from_generators(("s0", "s1"), [("s0", "s1")]))
    )


@dataclass(frozen=True)
class Bounds:
    max_size: int = 5  # classical instance size
    competing: int = 4  # competing objects in universal-property exhaustion
    apex: int = 6  # competing apexes for colimit checks
    base_stages: int = 2  # presheaf base size for generated instances
    per_stage: int = 3  # elements per stage for generated instances

    def as_dict(self) -> dict:
        return {
            "max_size": self.max_size,
            "competing": self.competing,
            "apex": self.apex,
            "base_stages": self.base_stages,
            "per_stage": self.per_stage,
        }


@dataclass
class Law:
    name: str
    statement: str
    bounds: Bounds
    runner: Callable  # (spec, bounds, backends) -> list[InstanceReport]
    negative: Callable  # (bounds) -> list[InstanceReport], at least one FAIL


def _gen_posets(n, pointed=False):
    return [(f"gen{'P' if pointed else ''}{P.n}.{i}", P) for i, P in enumerate(posets_upto(n, pointed=pointed))]


def _model_posets(spec, n, pointed=False):
    return [
        (f"model:{name}", P)
        for name, P in spec.posets.items()
        if P.n <= n and (not pointed or P.is_pointed())
    ]


def _classical_instances(spec, n, pointed=False):
    return _gen_posets(n, pointed) + _model_posets(spec, n, pointed)


def _ok(name, note=None):
    return InstanceReport(name, PASS, note)


def _bad(name, witness):
    return InstanceReport(name, FAIL, witness)


def _unavailable(name, reason):
    return InstanceReport(name, UNAVAILABLE, reason)


def _wants(backends, which) -> bool:
    return which in backends


# ---------------------------------------------------------------------------
# kz-adjunction

def run_kz(spec, b: Bounds, backends):
    out = []
    if _wants(backends, "classical"):
        for name, X in _classical_instances(spec, b.max_size, pointed=True):
            alg = li.algebra_structure(CL, X)
            if alg is None:
                out.append(_bad(name, "pointed object without a structure map"))
                continue
            ok, failures = li.kz_check(CL, alg)
            if not ok:
                out.append(_bad(name, fmt(failures[0])))
                continue
            structures = li.all_algebra_structures(CL, X)
            if structures != [alg.structure]:
                out.append(_bad(name, f"{len(structures)} structure maps found"))
                continue
            out.append(_ok(name))
    if _wants(backends, "presheaf"):
        bk = sierpinski_backend()
        O = omega(bk.base)
        alg = li.algebra_structure(bk, O)
        ok, failures = li.kz_check(bk, alg)
        structures = li.all_algebra_structures(bk, O)
        if ok and structures == [alg.structure]:
            out.append(_ok("omega/2-chain-base"))
        else:
            out.append(_bad("omega/2-chain-base", fmt(failures or structures)))
    return out


def neg_kz(b: Bounds):
    X = FinPoset.chain(3)
    ld = CL.lift(X)
    bad = MonotoneMap.make(
        ld.obj, X, lambda u: "c0" if ld.is_bot(None, u) else ("c2" if u == "c1" else u)
    )
    ok, failures = li.kz_check(CL, li.Algebra(X, bad))
    st = FAIL if not ok else PASS
    return [InstanceReport("corrupted fold on the 3-chain", st, fmt(failures[0]) if failures else None)]


# ---------------------------------------------------------------------------
# scone-universal / sierpinski-cocomma

def run_scone(spec, b: Bounds, backends):
    out = []
    if not _wants(backends, "classical"):
        return out
    for name, A in _classical_instances(spec, min(b.max_size, 3)):
        worst = None
        for _, C in _gen_posets(b.competing):
            ok, w = li.scone_universal_check(CL, A, C)
            if not ok:
                worst = (C, w)
                break
        if worst:
            out.append(_bad(name, f"against {fmt(worst[0])}: {fmt(worst[1])}"))
        else:
            out.append(_ok(name))
    return out


def _fake_scone_backend(junk=False):
    """A backend whose "lift" is coproduct-with-a-point (plus optional junk):
    the cone exists but is not universal."""
    base = ClassicalBackend()

    class Fake(ClassicalBackend):
        def lift(self, X):
            cd = base.coproduct(base.terminal(), X)
            obj = cd.obj
            if junk:
                cd2 = base.coproduct(obj, base.terminal())
                obj2 = cd2.obj
                unit = MonotoneMap.make(X, obj2, lambda a: ("in", 0, ("in", 1, a)))
                bottom = MonotoneMap.make(
                    base.terminal(), obj2, lambda _: ("in", 0, ("in", 0, "*"))
                )
                return LiftData(
                    obj2,
                    unit,
                    bottom,
                    lambda st, u: u == ("in", 0, ("in", 0, "*")),
                    lambda st, u: None,
                    lambda st, a: ("in", 0, ("in", 1, a)),
                    lambda st: ("in", 0, ("in", 0, "*")),
                )
            unit = MonotoneMap.make(X, obj, lambda a: ("in", 1, a))
            bottom = MonotoneMap.make(base.terminal(), obj, lambda _: ("in", 0, "*"))
            return LiftData(
                obj,
                unit,
                bottom,
                lambda st, u: u == ("in", 0, "*"),
                lambda st, u: None if u[1] == 0 else u[2],
                lambda st, a: ("in", 1, a),
                lambda st: ("in", 0, "*"),
            )

    return Fake()


def neg_scone(b: Bounds):
    fake = _fake_scone_backend()
    ok, w = li.scone_universal_check(fake, FinPoset.chain(2), FinPoset.chain(2))
    return [InstanceReport("coproduct-with-a-point posing as the cone", FAIL if not ok else PASS, fmt(w))]


def run_cocomma(spec, b: Bounds, backends):
    out = []
    if _wants(backends, "classical"):
        worst = None
        for _, C in _gen_posets(b.competing):
            ok, w = li.scone_universal_check(CL, CL.terminal(), C)
            if not ok:
                worst = (C, w)
                break
        out.append(
            _bad("sigma=lift(1)", f"against {fmt(worst[0])}: {fmt(worst[1])}")
            if worst
            else _ok("sigma=lift(1)")
        )
    if _wants(backends, "presheaf"):
        bk = sierpinski_backend()
        one = bk.terminal()
        competing = [one, omega(bk.base), InternalPoset.constant(bk.base, FinPoset.chain(2))]
        worst = None
        for C in competing:
            ok, w = li.scone_universal_check(bk, one, C)
            if not ok:
                worst = (C, w)
                break
        out.append(
            _bad("omega-cocomma/2-chain-base", fmt(worst)) if worst else _ok("omega-cocomma/2-chain-base")
        )
    return out


def neg_cocomma(b: Bounds):
    fake = _fake_scone_backend()
    ok, w = li.scone_universal_check(fake, fake.terminal(), FinPoset.chain(2))
    return [InstanceReport("two-antichain posing as sigma", FAIL if not ok else PASS, fmt(w))]


# ---------------------------------------------------------------------------
# open-classifier

def _classical_classification(A) -> tuple:
    sig = CL.lift(CL.terminal())
    opens = CL.scott_open_subobjects(A)
    chis = {}
    for members in opens:
        chi = CL.mor_from_fn(
            A,
            sig.obj,
            lambda st, a, m=members: sig.eta_elem(st, "*")
            if a in m[None]
            else sig.bot_elem(st),
        )
        chis[frozenset(members[None])] = chi
    homs = set(CL.hom(A, sig.obj))
    if set(chis.values()) != homs or len(chis) != len(opens):
        return False, f"{len(chis)} characteristic maps vs {len(homs)} maps into sigma"
    for members, chi in chis.items():
        recovered = frozenset(
            a for a in A.elements if chi(a) == sig.eta_elem(None, "*")
        )
        if recovered != members:
            return False, f"pullback of top recovers {fmt(recovered)} not {fmt(members)}"
    return True, None


def run_open_classifier(spec, b: Bounds, backends):
    out = []
    if _wants(backends, "classical"):
        for name, A in _classical_instances(spec, min(b.max_size, 4)):
            ok, w = _classical_classification(A)
            out.append(_ok(name) if ok else _bad(name, w))
    if _wants(backends, "presheaf"):
        bk = sierpinski_backend()
        targets = [("terminal", bk.terminal()), ("omega", omega(bk.base))]
        for name, ip in spec.iposets.items():
            if ip.size() <= 4:
                targets.append((f"model:{name}", ip))
        for name, A in targets:
            ok = subobject_classification_check(A)
            out.append(_ok(name) if ok else _bad(name, "classification bijection fails"))
    return out


def neg_open_classifier(b: Bounds):
    # present a non-open (not up-closed) subset as an open of the 2-chain
    A = FinPoset.chain(2)
    sig = CL.lift(CL.terminal())
    members = frozenset({"c0"})
    try:
        CL.mor_from_fn(
            A,
            sig.obj,
            lambda st, a: sig.eta_elem(st, "*") if a in members else sig.bot_elem(st),
        )
        return [InstanceReport("down-set posing as an open", PASS, None)]
    except StructureError as e:
        return [InstanceReport("down-set posing as an open", FAIL, str(e))]


# ---------------------------------------------------------------------------
# partial-product

def run_partial_product(spec, b: Bounds, backends):
    out = []
    if _wants(backends, "classical"):
        gens = _gen_posets(min(b.max_size, 3))
        for na, A in gens:
            for nb, B in gens:
                ok, w = li.partial_product_check(CL, A, B)
                if not ok:
                    out.append(_bad(f"{na}⇀{nb}", fmt(w)))
        out.append(_ok(f"all pairs ≤ {min(b.max_size, 3)} classical"))
    if _wants(backends, "presheaf"):
        bk = sierpinski_backend()
        ok, w = li.partial_product_check(bk, bk.terminal(), bk.terminal())
        out.append(_ok("1⇀1/2-chain-base") if ok else _bad("1⇀1/2-chain-base", fmt(w)))
    return out


def neg_partial_product(b: Bounds):
    # drop one partial map from the enumeration: the count no longer matches
    A = FinPoset.chain(2)
    pms = li.enumerate_partial_maps(CL, A, A)[1:]
    totals = [li.partial_to_total(CL, pm) for pm in pms]
    homs = CL.hom(A, CL.lift(A).obj)
    ok = set(totals) == set(homs)
    return [
        InstanceReport(
            "enumeration missing one span",
            FAIL if not ok else PASS,
            f"{len(totals)} spans vs {len(homs)} classifying maps",
        )
    ]


# ---------------------------------------------------------------------------
# joint-epi / lax-epi

def run_joint_epi(spec, b: Bounds, backends):
    out = []
    if _wants(backends, "classical"):
        for name, A in _classical_instances(spec, min(b.max_size, 3)):
            for _, C in _gen_posets(b.competing):
                ok, w = li.joint_epi_check(CL, A, C)
                if not ok:
                    out.append(_bad(name, f"against {fmt(C)}: {fmt(w)}"))
                    break
            else:
                out.append(_ok(name))
    return out


def run_lax_epi(spec, b: Bounds, backends):
    out = []
    if _wants(backends, "classical"):
        for name, A in _classical_instances(spec, min(b.max_size, 3)):
            for _, C in _gen_posets(b.competing):
                ok, w = li.lax_epi_check(CL, A, C)
                if not ok:
                    out.append(_bad(name, f"against {fmt(C)}: {fmt(w)}"))
                    break
            else:
                out.append(_ok(name))
    return out


def neg_joint_epi(b: Bounds):
    fake = _fake_scone_backend(junk=True)
    ok, w = li.joint_epi_check(fake, FinPoset.chain(2), FinPoset.chain(2))
    return [InstanceReport("cone with a stray point", FAIL if not ok else PASS, fmt(w))]


def neg_lax_epi(b: Bounds):
    fake = _fake_scone_backend(junk=True)
    ok, w = li.lax_epi_check(fake, FinPoset.chain(2), FinPoset.chain(2))
    return [InstanceReport("cone with a stray point", FAIL if not ok else PASS, fmt(w))]


# ---------------------------------------------------------------------------
# conservative-L

def run_conservative(spec, b: Bounds, backends):
    out = []
    if _wants(backends, "classical"):
        gens = _gen_posets(min(b.max_size, 3))
        for na, A in gens:
            for nb, B in gens:
                for f in CL.hom(A, B):
                    ok, w = li.conservativity_check(CL, f)
                    if not ok:
                        out.append(_bad(f"{na}->{nb}", f"{fmt(f)}: {fmt(w)}"))
        for name, f in spec.maps.items():
            ok, w = li.conservativity_check(CL, f)
            out.append(_ok(f"model:{name}") if ok else _bad(f"model:{name}", fmt(w)))
        out.append(_ok(f"all maps between posets ≤ {min(b.max_size, 3)}"))
    return out


def neg_conservative(b: Bounds):
    # pair a map with the functorial image of a different map: the unit
    # square no longer commutes
    A = FinPoset.chain(2)
    f = MonotoneMap.make(A, A, lambda x: "c1")
    g = CL.identity(A)
    la = CL.lift(A)
    lg = CL.lift_map(g)
    square = CL.compose(lg, la.unit) == CL.compose(la.unit, f)
    return [
        InstanceReport(
            "mismatched square",
            FAIL if not square else PASS,
            "unit square does not commute for the swapped pair",
        )
    ]


# ---------------------------------------------------------------------------
# pointed-iff-algebra / pointed-iff-inductive / strict-iff-inductive /
# strict-iff-hom / monadicity-triple

def run_pointed_iff_algebra(spec, b: Bounds, backends):
    out = []
    if _wants(backends, "classical"):
        for name, X in _classical_instances(spec, min(b.max_size, 4)):
            alg = li.algebra_structure(CL, X)
            if (alg is not None) != X.is_pointed():
                out.append(_bad(name, "structure map existence disagrees with pointedness"))
                continue
            structures = li.all_algebra_structures(CL, X)
            want = 1 if X.is_pointed() else 0
            if len(structures) != want:
                out.append(_bad(name, f"{len(structures)} structure maps"))
                continue
            out.append(_ok(name))
    if _wants(backends, "presheaf"):
        bk = sierpinski_backend()
        for nm, A in [("omega", omega(bk.base)), ("terminal", bk.terminal())]:
            alg = li.algebra_structure(bk, A)
            out.append(
                _ok(nm)
                if (alg is not None) == bk.is_pointed(A)
                else _bad(nm, "existence disagrees with pointedness")
            )
    return out


def neg_pointed_iff_algebra(b: Bounds):
    # a non-pointed object with a claimed fold: the laws must reject it
    X = FinPoset.antichain(2)
    ld = CL.lift(X)
    candidate = MonotoneMap.make(ld.obj, X, lambda u: "a0")
    ok = li.is_algebra(CL, X, candidate)
    return [
        InstanceReport(
            "constant fold on the 2-antichain",
            FAIL if not ok else PASS,
            "unit law fails: fold(eta(a1)) = a0",
        )
    ]


def _inductive_object(X) -> bool:
    return all(lub(X, S) is not None for S in semidirected_subsets(X))


def run_pointed_iff_inductive(spec, b: Bounds, backends):
    out = []
    if _wants(backends, "classical"):
        for name, X in _classical_instances(spec, min(b.max_size, 4)):
            if X.is_pointed() != _inductive_object(X):
                out.append(_bad(name, "pointedness disagrees with semidirected completeness"))
            else:
                out.append(_ok(name))
    return out


def neg_pointed_iff_inductive(b: Bounds):
    # corrupt the inductive side to quantify over directed subsets only:
    # the empty family is lost and the 2-antichain slips through
    from liftdom.order import directed_subsets

    X = FinPoset.antichain(2)
    corrupted = all(lub(X, S) is not None for S in directed_subsets(X))
    mismatch = corrupted != X.is_pointed()
    return [
        InstanceReport(
            "inhabitation dropped from the quantifier",
            FAIL if mismatch else PASS,
            "2-antichain: no bottom, yet every inhabited directed subset has a sup",
        )
    ]


def _preserves_semidirected_sups(f) -> bool:
    for S in semidirected_subsets(f.dom):
        v = lub(f.dom, S)
        if v is None:
            continue
        image = Subset(f.cod, frozenset(f(x) for x in S.members))
        w = lub(f.cod, image)
        if w is None or f(v) != w:
            return False
    return True


def run_strict_iff_inductive(spec, b: Bounds, backends):
    out = []
    if _wants(backends, "classical"):
        gens = _gen_posets(min(b.max_size, 3), pointed=True)
        for na, A in gens:
            for nb, B in gens:
                for f in CL.hom(A, B):
                    if li.is_strict(CL, f) != _preserves_semidirected_sups(f):
                        out.append(_bad(f"{na}->{nb}", fmt(f)))
        out.append(_ok(f"all maps between pointed posets ≤ {min(b.max_size, 3)}"))
    return out


def neg_strict_iff_inductive(b: Bounds):
    # against directed sups only, the constant-top endomap of the 2-chain
    # wrongly qualifies as inductive despite not being strict
    from liftdom.order import directed_subsets

    S = FinPoset.chain(2)
    f = MonotoneMap.make(S, S, lambda _: "c1")

    def preserves_directed(f):
        for Sub in directed_subsets(f.dom):
            v = lub(f.dom, Sub)
            image = Subset(f.cod, frozenset(f(x) for x in Sub.members))
            if f(v) != lub(f.cod, image):
                return False
        return True

    mismatch = li.is_strict(CL, f) != preserves_directed(f)
    return [
        InstanceReport(
            "empty family dropped from the comparison",
            FAIL if mismatch else PASS,
            "const-top preserves all inhabited directed sups but moves bottom",
        )
    ]


def run_strict_iff_hom(spec, b: Bounds, backends):
    out = []
    if _wants(backends, "classical"):
        gens = _gen_posets(min(b.max_size, 4), pointed=True)
        for na, A in gens:
            for nb, B in gens:
                for f in CL.hom(A, B):
                    if not li.strict_iff_hom_check(CL, f):
                        out.append(_bad(f"{na}->{nb}", fmt(f)))
        out.append(_ok(f"all maps between pointed posets ≤ {min(b.max_size, 4)}"))
    return out


def neg_strict_iff_hom(b: Bounds):
    # against a corrupted fold the equivalence breaks for the identity map
    X = FinPoset.chain(3)
    ld = CL.lift(X)
    good = CL.algebra_structure(X)
    bad = MonotoneMap.make(
        ld.obj, X, lambda u: "c0" if ld.is_bot(None, u) else ("c2" if u == "c1" else u)
    )
    f = CL.identity(X)
    mismatch = li.is_strict(CL, f) != li.is_homomorphism(CL, f, good, bad)
    return [
        InstanceReport(
            "corrupted fold on the codomain",
            FAIL if mismatch else PASS,
            "identity is strict but fails the square against the corrupted fold",
        )
    ]


def run_monadicity(spec, b: Bounds, backends):
    out = []
    out.extend(run_pointed_iff_algebra(spec, replace(b, max_size=min(b.max_size, 4)), backends))
    out.extend(run_pointed_iff_inductive(spec, b, backends))
    if _wants(backends, "classical"):
        gens = _gen_posets(min(b.max_size, 3), pointed=True)
        for na, A in gens:
            for nb, B in gens:
                for f in CL.hom(A, B):
                    strict = li.is_strict(CL, f)
                    tests = (
                        li.strict_iff_hom_check(CL, f),
                        strict == _preserves_semidirected_sups(f),
                    )
                    if not all(tests):
                        out.append(_bad(f"{na}->{nb}", fmt(f)))
        out.append(_ok("map-level equivalences"))
    return out


def neg_monadicity(b: Bounds):
    return neg_strict_iff_hom(b)


# ---------------------------------------------------------------------------
# colimits

def _generated_diagrams(max_nodes=3, max_carrier=3, count=24):
    """Deterministic connected algebra diagrams over pointed carriers."""
    import random

    rng = random.Random(20240811)
    carriers = [P for P in posets_upto(max_carrier, pointed=True)]
    shapes = [
        (("a",), ()),
        (("a", "b"), (("e0", "a", "b"),)),
        (("a", "b"), (("e0", "a", "b"), ("e1", "a", "b"))),
        (("a", "b", "c"), (("e0", "a", "b"), ("e1", "b", "c"))),
        (("a", "b", "c"), (("e0", "a", "b"), ("e1", "a", "c"))),
        (("a", "b", "c"), (("e0", "a", "c"), ("e1", "b", "c"))),
    ]
    out = []
    guard = 0
    while len(out) < count and guard < 4000:
        guard += 1
        nodes, edges = shapes[rng.randrange(len(shapes))]
        objects = {n: carriers[rng.randrange(len(carriers))] for n in nodes}
        arrows = {}
        ok = True
        for name, s, t in edges:
            pool = li.strict_hom_set(CL, objects[s], objects[t])
            if not pool:
                ok = False
                break
            arrows[name] = pool[rng.randrange(len(pool))]
        if not ok:
            continue
        out.append(co.Diagram(nodes, edges, objects, arrows))
    return out


def run_connected_colimits(spec, b: Bounds, backends):
    out = []
    if not _wants(backends, "classical"):
        return out
    apexes = posets_upto(b.apex)
    for i, d in enumerate(_generated_diagrams()):
        ok, w = co.creation_check(CL, d, apexes)
        shape = f"{len(d.nodes)} nodes/{len(d.edges)} edges"
        out.append(_ok(f"diagram#{i} ({shape})") if ok else _bad(f"diagram#{i}", fmt(w)))
    return out


def neg_connected_colimits(b: Bounds):
    d = co.Diagram(
        ("a", "b"), (), {"a": FinPoset.chain(1), "b": FinPoset.chain(1)}, {}
    )
    ok, why = co.creation_check(CL, d, posets_upto(2))
    return [InstanceReport("disconnected diagram", FAIL if not ok else PASS, str(why))]


def run_algebras_cocomplete(spec, b: Bounds, backends):
    out = []
    if not _wants(backends, "classical"):
        return out
    apexes = posets_upto(b.apex)
    S = FinPoset.chain(2)
    C3 = FinPoset.chain(3)
    pairs = [(S, S), (S, C3), (C3, C3), (S, FinPoset.chain(1))]
    for X, Y in pairs:
        try:
            ok, w = co.coproduct_algebras_universal_check(CL, X, Y, apexes)
        except (StructureError, UnavailableError) as e:
            out.append(_unavailable(f"{X.n}+{Y.n}", str(e)))
            continue
        out.append(
            _ok(f"coproduct {X.n}⊕{Y.n}") if ok else _bad(f"coproduct {X.n}⊕{Y.n}", fmt(w))
        )
    # a connected piece, for the general-colimit claim
    d = _generated_diagrams(count=4)[2]
    ok, w = co.creation_check(CL, d, apexes)
    out.append(_ok("connected piece") if ok else _bad("connected piece", fmt(w)))
    return out


def neg_algebras_cocomplete(b: Bounds):
    # the plain coproduct (bottoms not glued) is not even pointed, so it
    # cannot be the coproduct in algebras
    S = FinPoset.chain(2)
    cd = CL.coproduct(S, S)
    pointed = CL.is_pointed(cd.obj)
    return [
        InstanceReport(
            "plain coproduct posing as algebra coproduct",
            FAIL if not pointed else PASS,
            "the apex has two minimal elements and no bottom",
        )
    ]


def run_colimits_enriched(spec, b: Bounds, backends):
    out = []
    if not _wants(backends, "classical"):
        return out
    apexes = posets_upto(b.apex)
    S = FinPoset.chain(2)
    pt = FinPoset.chain(1)
    d = co.Diagram(
        ("a", "b"),
        (("e", "a", "b"),),
        {"a": pt, "b": S},
        {"e": MonotoneMap.make(pt, S, lambda _: "c0")},
    )
    res = co.colimit(CL, d)
    ok, w = co.colimits_enriched_check(CL, d, res, apexes)
    out.append(_ok("pushout instance") if ok else _bad("pushout instance", fmt(w)))
    d2 = co.Diagram(("a",), (), {"a": S}, {})
    res2 = co.colimit(CL, d2)
    ok, w = co.colimits_enriched_check(CL, d2, res2, apexes)
    out.append(_ok("single node") if ok else _bad("single node", fmt(w)))
    return out


def neg_colimits_enriched(b: Bounds):
    # a non-surjective cone: comparisons can disagree outside the legs' image
    S = FinPoset.chain(2)
    d = co.Diagram(("a",), (), {"a": FinPoset.chain(1)}, {})
    fake = co.ColimitResult(
        S, {"a": MonotoneMap.make(FinPoset.chain(1), S, lambda _: "c0")}, None
    )
    ok, w = co.colimits_enriched_check(CL, d, fake, [S])
    return [InstanceReport("proper subobject posing as apex", FAIL if not ok else PASS, fmt(w))]


# ---------------------------------------------------------------------------
# tensor laws

def run_smash_presentations(spec, b: Bounds, backends):
    out = []
    if not _wants(backends, "classical"):
        return out
    pointed = _gen_posets(min(b.max_size, 5), pointed=True)
    bad = []
    for na, A in pointed:
        for nb, B in pointed:
            tensors = [te.smash(CL, A, B, k) for k in (1, 2, 3, 4)]
            try:
                for i in range(4):
                    for j in range(i + 1, 4):
                        te.smash_comparison(CL, tensors[i], tensors[j])
            except StructureError as e:
                bad.append(_bad(f"{na}⊗{nb}", str(e)))
                continue
            oracle = te.direct_smash_classical(CL, A, B)
            from .order import poset_iso

            if poset_iso(tensors[0].obj, oracle) is None:
                bad.append(_bad(f"{na}⊗{nb}", "disagrees with the direct quotient"))
                continue
            if tensors[0].obj.n != (A.n - 1) * (B.n - 1) + 1:
                bad.append(_bad(f"{na}⊗{nb}", f"cardinality {tensors[0].obj.n}"))
    out.extend(bad)
    out.append(_ok(f"four presentations agree for pointed pairs ≤ {min(b.max_size, 5)}"))
    codomains = posets_upto(min(b.competing, 4), pointed=True)
    small = _gen_posets(2, pointed=True) + [("chain3", FinPoset.chain(3))]
    for na, A in small:
        for nb, B in small:
            T = te.smash(CL, A, B)
            ok, w = te.universal_bistrict_check(CL, T, codomains)
            if not ok:
                out.append(_bad(f"universal {na}⊗{nb}", fmt(w)))
    out.append(_ok("unique bistrict factorisation on the bounded range"))
    return out


def neg_smash_presentations(b: Bounds):
    # an unbalanced quotient (only left bottoms collapsed) is not the smash
    A = FinPoset.chain(2)
    from .order import poset_iso, quotient_poset

    pd = CL.product(A, A)
    seeds = [(("pr", "c0", x), ("pr", "c0", "c0")) for x in A.elements]
    Q, _ = quotient_poset(pd.obj, seeds)
    T = te.smash(CL, A, A)
    ok = poset_iso(Q, T.obj) is not None
    return [
        InstanceReport(
            "one-sided quotient posing as the smash",
            FAIL if not ok else PASS,
            f"{Q.n} elements vs {T.obj.n}",
        )
    ]


def run_bistrict_iff_bilinear(spec, b: Bounds, backends):
    out = []
    if not _wants(backends, "classical"):
        return out
    pointed = _gen_posets(min(b.max_size, 3), pointed=True)
    for na, A in pointed:
        for nb, B in pointed:
            pd = CL.product(A, B)
            for nc, C in pointed:
                for f in CL.hom(pd.obj, C):
                    if not te.bistrict_iff_bilinear_check(CL, f, A, B):
                        out.append(_bad(f"{na},{nb}->{nc}", fmt(f)))
    out.append(_ok(f"exhaustive over pointed triples ≤ {min(b.max_size, 3)}"))
    return out


def neg_bistrict_iff_bilinear(b: Bounds):
    # fold the arguments against swapped structure maps: the meet map
    # stays bistrict but the corrupted square fails
    S = FinPoset.chain(3)
    S2 = FinPoset.chain(2)
    pd = CL.product(S, S2)
    meet = CL.mor_from_fn(
        pd.obj,
        S2,
        lambda st, x: "c1" if x[1] == "c2" and x[2] == "c1" else "c0",
    )
    la, lb = CL.lift(S), CL.lift(S2)
    pd_l = CL.product(la.obj, lb.obj)
    kappa = li.commutator(CL, S, S2)
    alpha_c = CL.algebra_structure(S2)
    lhs = CL.compose(CL.compose(alpha_c, CL.lift_map(meet)), kappa)
    wrong_folds = CL.pair(
        pd,
        CL.compose(CL.algebra_structure(S), CL.compose(CL.lift_map(CL.identity(S)), pd_l.fst)),
        CL.compose(
            MonotoneMap.make(lb.obj, S2, lambda u: "c1"), pd_l.snd
        ),
    )
    rhs = CL.compose(meet, wrong_folds)
    mismatch = te.is_bistrict(CL, meet, S, S2) and lhs != rhs
    return [
        InstanceReport(
            "corrupted fold in the bilinearity square",
            FAIL if mismatch else PASS,
            "bistrict map fails the square with a constant-top fold",
        )
    ]


def run_seal_iso(spec, b: Bounds, backends):
    out = []
    if not _wants(backends, "classical"):
        return out
    pointed = _gen_posets(min(b.max_size, 3), pointed=True)
    for na, A in pointed:
        for nb, B in pointed:
            ok, w = te.seal_iso_check(CL, A, B)
            if not ok:
                out.append(_bad(f"{na}⊠{nb}", fmt(w)))
    ok, w = te.seal_represents_bilinear_check(
        CL, FinPoset.chain(2), FinPoset.chain(2), posets_upto(3)
    )
    out.append(
        _ok("tensor represents bilinear maps") if ok else _bad("representability", fmt(w))
    )
    out.append(_ok(f"tensor ≅ smash for pointed pairs ≤ {min(b.max_size, 3)}"))
    return out


def neg_seal_iso(b: Bounds):
    from .order import poset_iso, quotient_poset

    A = FinPoset.chain(2)
    Q, _, box = te.seal_tensor(CL, A, A)
    pd = CL.product(A, A)
    seeds = [(("pr", "c0", x), ("pr", "c0", "c0")) for x in A.elements]
    halfsmash, _ = quotient_poset(pd.obj, seeds)
    ok = poset_iso(Q, halfsmash) is not None
    return [
        InstanceReport(
            "one-sided quotient posing as the tensor",
            FAIL if not ok else PASS,
            f"{Q.n} vs {halfsmash.n} elements",
        )
    ]


def run_monoidal_adjunction(spec, b: Bounds, backends):
    out = []
    if _wants(backends, "classical"):
        gens = _gen_posets(min(b.max_size, 3))
        for na, A in gens:
            for nb, B in gens:
                ok, w = te.monoidal_adjunction_check(CL, A, B)
                if not ok:
                    out.append(_bad(f"L{na}⊗L{nb}", fmt(w)))
        out.append(_ok(f"strong/lax symmetry for pairs ≤ {min(b.max_size, 3)}"))
        for na, A in _gen_posets(2, pointed=True):
            for nb, B in _gen_posets(2, pointed=True):
                if not te.triangle_check(CL, A, B):
                    out.append(_bad(f"triangle {na},{nb}", "unitor triangle fails"))
        S = FinPoset.chain(2)
        if not te.hexagon_check(CL, S, S, S):
            out.append(_bad("hexagon chain2", "hexagon fails"))
        if not te.pentagon_check(CL, S, S, S, S):
            out.append(_bad("pentagon chain2", "pentagon fails"))
        out.append(_ok("coherence on 2-chains"))
    if backends == ("presheaf",):
        # only on explicit request: the smash of two lifted objects needs a
        # coequaliser the stagewise quotient cannot deliver, so this
        # instance reports unavailable rather than an approximation
        bk = sierpinski_backend()
        try:
            ok, w = te.monoidal_adjunction_check(bk, bk.terminal(), bk.terminal())
            out.append(_ok("1,1/2-chain-base") if ok else _bad("1,1/2-chain-base", fmt(w)))
        except UnavailableError as e:
            out.append(_unavailable("1,1/2-chain-base", e.reason))
    return out


def neg_monoidal_adjunction(b: Bounds):
    # replace the lifted swap with the identity: the symmetry square fails
    S = FinPoset.chain(2)
    la = CL.lift(S)
    T = te.smash(CL, la.obj, la.obj)
    kappa = li.commutator(CL, S, S)
    kbar = te.factor_bistrict(CL, T, kappa)
    beta_t = te.braiding(CL, la.obj, la.obj)
    wrong = CL.identity(CL.lift(CL.product(S, S).obj).obj)
    square = CL.compose(kbar, beta_t) == CL.compose(wrong, kbar)
    return [
        InstanceReport(
            "identity posing as the lifted swap",
            FAIL if not square else PASS,
            "symmetry square fails when the swap is dropped",
        )
    ]


def run_tensor_hom(spec, b: Bounds, backends):
    out = []
    if not _wants(backends, "classical"):
        return out
    pointed = _gen_posets(2, pointed=True) + [("chain3", FinPoset.chain(3))]
    for nc, C in pointed:
        for na, A in pointed:
            for nb, B in pointed:
                ok, w = te.tensor_hom_adjunction_check(CL, C, A, B)
                if not ok:
                    out.append(_bad(f"{nc}⊗{na}⊸{nb}", fmt(w)))
    ok, w = te.tensor_hom_naturality_check(
        CL, FinPoset.chain(2), FinPoset.chain(2), FinPoset.chain(2), FinPoset.chain(2)
    )
    out.append(_ok("naturality on 2-chains") if ok else _bad("naturality", fmt(w)))
    out.append(_ok("currying bijections verified"))
    return out


def neg_tensor_hom(b: Bounds):
    # currying with the first argument pinned to bottom loses information:
    # the roundtrip misses the universal map itself
    C, A = FinPoset.chain(2), FinPoset.chain(2)
    T = te.smash(CL, C, A)
    E = CL.exponential(A, T.obj)
    pd = CL.product(C, A)
    f = T.universal
    g_bad = CL.mor_from_fn(
        C,
        E.obj,
        lambda st, c: E.encode(
            st, {None: {a: CL.app(f, st, pd.pack(st, "c0", a)) for a in A.elements}}
        ),
    )
    back = CL.mor_from_fn(
        pd.obj, T.obj, lambda st, x: E.apply_elem(st, CL.app(g_bad, st, x[1]), st, x[2])
    )
    mism = back != f
    return [
        InstanceReport(
            "currying with a pinned argument",
            FAIL if mism else PASS,
            "roundtrip collapses the first factor to its bottom",
        )
    ]


def run_homs_coincide(spec, b: Bounds, backends):
    out = []
    if _wants(backends, "classical"):
        pointed = _gen_posets(min(b.max_size, 3), pointed=True)
        for na, A in pointed:
            for nb, B in pointed:
                if not te.homs_coincide_check(CL, A, B):
                    out.append(_bad(f"{na}⊸{nb}", "linear and strict members differ"))
        out.append(_ok(f"pointed pairs ≤ {min(b.max_size, 3)}"))
        if not te.kock_criterion_check(CL, FinPoset.chain(2), FinPoset.chain(2)):
            out.append(_bad("kock-criterion", "extension map is not strict"))
    if _wants(backends, "presheaf"):
        bk = sierpinski_backend()
        S = InternalPoset.constant(bk.base, FinPoset.chain(2))
        try:
            ok = te.homs_coincide_check(bk, S, S)
            out.append(
                _ok("const-chain2/2-chain-base")
                if ok
                else _bad("const-chain2/2-chain-base", "members differ")
            )
        except UnavailableError as e:
            out.append(_unavailable("const-chain2/2-chain-base", e.reason))
    return out


def neg_homs_coincide(b: Bounds):
    # corrupt the extension: treating the fresh bottom as the top makes the
    # linear side differ from the strict one
    A = B = FinPoset.chain(2)
    E = CL.exponential(A, B)
    la = CL.lift(A)
    alpha_a = CL.algebra_structure(A)
    strict_members = set()
    corrupt_members = set()
    for fe in E.obj.elements:
        comp = {a: E.apply_elem(None, fe, None, a) for a in A.elements}
        if comp[A.bottom()] == B.bottom():
            strict_members.add(fe)
        ok = True
        for u in la.obj.elements:
            lhs = comp[CL.app(alpha_a, None, u)]
            rhs = "c1" if la.is_bot(None, u) else comp[u]
            if lhs != rhs:
                ok = False
                break
        if ok:
            corrupt_members.add(fe)
    mismatch = strict_members != corrupt_members
    return [
        InstanceReport(
            "extension sending bottom to top",
            FAIL if mismatch else PASS,
            f"{len(strict_members)} strict vs {len(corrupt_members)} corrupted-linear",
        )
    ]


def run_phoa(spec, b: Bounds, backends):
    out = []
    if _wants(backends, "classical"):
        for name, Y in _classical_instances(spec, min(b.max_size, 4)):
            if not li.phoa_check(CL, Y):
                out.append(_bad(name, "power by the walking arrow differs"))
            else:
                out.append(_ok(name))
    if _wants(backends, "presheaf"):
        bk = sierpinski_backend()
        ok = li.phoa_check(bk, bk.terminal())
        out.append(_ok("terminal/2-chain-base") if ok else _bad("terminal/2-chain-base", "power differs"))
    return out


def neg_phoa(b: Bounds):
    from .order import poset_iso

    Y = FinPoset.chain(2)
    sigma = CL.lift(CL.terminal())
    E = CL.exponential(sigma.obj, Y)
    full = CL.product(Y, Y)
    ok = poset_iso(E.obj, full.obj) is not None
    return [
        InstanceReport(
            "full square posing as the arrow object",
            FAIL if not ok else PASS,
            f"{E.obj.n} function elements vs {full.obj.n} pairs",
        )
    ]


def run_paths(spec, b: Bounds, backends):
    out = []
    if not _wants(backends, "classical"):
        return out
    for na, A in _gen_posets(2):
        for nb, B in _gen_posets(min(b.max_size, 3)):
            ok, w = li.paths_check(CL, A, B)
            if not ok:
                out.append(_bad(f"{na}~>{nb}", fmt(w)))
    out.append(_ok(f"paths = pointwise order, A ≤ 2, B ≤ {min(b.max_size, 3)}"))
    return out


def neg_paths(b: Bounds):
    fake = _fake_scone_backend(junk=True)
    ok, w = li.paths_check(fake, FinPoset.chain(1), FinPoset.chain(2))
    return [InstanceReport("interval with a stray point", FAIL if not ok else PASS, fmt(w))]


def run_top_opfibration(spec, b: Bounds, backends):
    out = []
    if _wants(backends, "classical"):
        ok = li.top_opfibration_check(CL)
        out.append(_ok("classical") if ok else _bad("classical", "comma is not a point"))
    if _wants(backends, "presheaf"):
        for name, base in list(spec.bases.items()):
            if base.poset.n <= b.base_stages:
                bk = presheaf_for(base)
                ok = li.top_opfibration_check(bk)
                out.append(
                    _ok(f"base:{name}") if ok else _bad(f"base:{name}", "comma is not a point")
                )
    return out


def neg_top_opfibration(b: Bounds):
    # take the bottom truth value as the claimed top: its upper set is all
    # of sigma, not a point
    sigma = CL.lift(CL.terminal())
    members = {
        None: frozenset(
            s
            for s in sigma.obj.elements
            if sigma.obj.leq(sigma.bot_elem(None), s)
        )
    }
    comma, _ = CL.subobject(sigma.obj, members)
    from .order import poset_iso

    ok = poset_iso(comma, CL.terminal()) is not None
    return [
        InstanceReport(
            "bottom posing as the universal point",
            FAIL if not ok else PASS,
            f"comma object has {comma.n} elements",
        )
    ]


def run_nonboolean_lift(spec, b: Bounds, backends):
    out = []
    if not _wants(backends, "presheaf"):
        return out
    bk = sierpinski_backend()
    O = omega(bk.base)
    lone = bk.lift(bk.terminal())
    from .presheaf import global_elements_raw

    sizes_ok = (
        len(O.at("s1")) == 3 and len(O.at("s0")) == 2 and len(global_elements_raw(O)) == 3
    )
    out.append(
        _ok("omega sizes 3/2, 3 points")
        if sizes_ok
        else _bad("omega sizes", f"{len(O.at('s1'))}/{len(O.at('s0'))}")
    )
    out.append(
        _ok("lift(1) ≅ omega")
        if bk.iso(lone.obj, O) is not None
        else _bad("lift(1) ≅ omega", "no natural iso found")
    )
    two = bk.coproduct(bk.terminal(), bk.terminal())
    out.append(
        _ok("lift(1) ≇ 1+1")
        if bk.iso(lone.obj, two.obj) is None
        else _bad("lift(1) ≇ 1+1", "iso found; lifting collapsed to a coproduct")
    )
    members = {p: frozenset(s for s in O.at(p) if s.members) for p in bk.base.stages}
    P, incl = bk.subobject(O, members)
    lp = bk.lift(P)
    lbang = bk.lift_map(bk.bang(P))
    noniso = not bk.is_iso(lbang)
    out.append(
        _ok("lift(nonbottom part) ↛ lift(1) is not iso")
        if noniso
        else _bad("brouwerian instance", "the comparison is an iso")
    )
    ok, _h = li.free_on_positives_check(bk, O)
    out.append(
        _ok("omega is free on its positive part")
        if ok
        else _bad("free-on-positives", "canonical extension is not iso")
    )
    return out


def neg_nonboolean_lift(b: Bounds):
    # over the degenerate one-stage base the topos is boolean and the same
    # comparison IS an isomorphism: the phenomenon disappears
    bk = presheaf_for(BasePoset(FinPoset(("s",), frozenset([("s", "s")]))))
    O = omega(bk.base)
    members = {"s": frozenset(s for s in O.at("s") if s.members)}
    P, _ = bk.subobject(O, members)
    lbang = bk.lift_map(bk.bang(P))
    is_iso = bk.is_iso(lbang)
    return [
        InstanceReport(
            "degenerate one-stage base",
            FAIL if is_iso else PASS,
            "comparison became invertible: booleanness kills the counterexample",
        )
    ]


def run_commutative_monad(spec, b: Bounds, backends):
    out = []
    if _wants(backends, "classical"):
        gens = _gen_posets(min(b.max_size, 3))
        for na, A in gens:
            for nb, B in gens:
                k1, k2 = li.commutator_both(CL, A, B)
                if k1 != k2:
                    out.append(_bad(f"{na}×{nb}", "extension orders disagree"))
                    continue
                la, lb = CL.lift(A), CL.lift(B)
                pd_l = CL.product(la.obj, lb.obj)
                pab = CL.product(A, B)
                lab = CL.lift(pab.obj)
                eta_pair = CL.pair(
                    pd_l,
                    CL.compose(la.unit, pab.fst),
                    CL.compose(lb.unit, pab.snd),
                )
                if CL.compose(k1, eta_pair) != lab.unit:
                    out.append(_bad(f"{na}×{nb}", "commutator misses the unit pair"))
                    continue
                if not te.is_bistrict(CL, k1, la.obj, lb.obj):
                    out.append(_bad(f"{na}×{nb}", "commutator is not bistrict"))
        out.append(_ok(f"extension orders agree for pairs ≤ {min(b.max_size, 3)}"))
        for na, A in _gen_posets(2, pointed=True):
            for nb, B in _gen_posets(2, pointed=True):
                if not te.kock_criterion_check(CL, A, B):
                    out.append(_bad(f"kock {na},{nb}", "extension map not strict"))
        out.append(_ok("strict extension criterion on pointed pairs ≤ 2"))
    if _wants(backends, "presheaf"):
        bk = sierpinski_backend()
        k1, k2 = li.commutator_both(bk, bk.terminal(), bk.terminal())
        out.append(
            _ok("1,1/2-chain-base") if k1 == k2 else _bad("1,1/2-chain-base", "orders disagree")
        )
    return out


def neg_commutative_monad(b: Bounds):
    # twist the output of the commutator on one side only: the twisted map
    # no longer restricts to the unit pairing
    A = FinPoset.chain(2)
    k = li.commutator(CL, A, A)
    lswap = CL.lift_map(te.swap_product(CL, A, A))
    twisted = CL.compose(lswap, k)
    la = CL.lift(A)
    pab = CL.product(A, A)
    pd_l = CL.product(la.obj, la.obj)
    eta_pair = CL.pair(
        pd_l, CL.compose(la.unit, pab.fst), CL.compose(la.unit, pab.snd)
    )
    lab = CL.lift(pab.obj)
    mismatch = CL.compose(twisted, eta_pair) != lab.unit
    return [
        InstanceReport(
            "commutator twisted by a one-sided swap",
            FAIL if mismatch else PASS,
            "twisted composite sends a unit pair to the swapped unit",
        )
    ]


# ---------------------------------------------------------------------------
# registry

def _law(name, statement, bounds, runner, negative):
    return Law(name, statement, bounds, runner, negative)


REGISTRY: dict = {
    law.name: law
    for law in [
        _law(
            "kz-adjunction",
            "the structure map of every algebra is left adjoint to the unit, and is the unique structure map",
            Bounds(max_size=4),
            run_kz,
            neg_kz,
        ),
        _law(
            "scone-universal",
            "the lift of A is the universal lax cone over A: each lax square datum factors uniquely",
            Bounds(max_size=3, competing=4),
            run_scone,
            neg_scone,
        ),
        _law(
            "sierpinski-cocomma",
            "sigma is the cocomma object of the two points: global lax pairs classify maps out of it",
            Bounds(competing=4),
            run_cocomma,
            neg_cocomma,
        ),
        _law(
            "open-classifier",
            "Scott-open subobjects correspond to characteristic maps into the classifier, with the pullback property",
            Bounds(max_size=4),
            run_open_classifier,
            neg_open_classifier,
        ),
        _law(
            "partial-product",
            "spans with Scott-open domain correspond order-isomorphically to maps into the lift",
            Bounds(max_size=3),
            run_partial_product,
            neg_partial_product,
        ),
        _law(
            "joint-epi",
            "bottom and unit are jointly epimorphic out of every lift",
            Bounds(max_size=3, competing=4),
            run_joint_epi,
            neg_joint_epi,
        ),
        _law(
            "lax-epi",
            "restriction along bottom and unit is an order-embedding on hom posets",
            Bounds(max_size=3, competing=4),
            run_lax_epi,
            neg_lax_epi,
        ),
        _law(
            "conservative-L",
            "the unit naturality square is a pullback, so the lifting functor reflects isomorphisms",
            Bounds(max_size=3),
            run_conservative,
            neg_conservative,
        ),
        _law(
            "pointed-iff-algebra",
            "a dcpo carries an algebra structure exactly when it is pointed, and then a unique one",
            Bounds(max_size=4),
            run_pointed_iff_algebra,
            neg_pointed_iff_algebra,
        ),
        _law(
            "pointed-iff-inductive",
            "pointed = every semidirected subset has a supremum",
            Bounds(max_size=4),
            run_pointed_iff_inductive,
            neg_pointed_iff_inductive,
        ),
        _law(
            "strict-iff-inductive",
            "a map between pointed objects is strict exactly when it preserves semidirected suprema",
            Bounds(max_size=3),
            run_strict_iff_inductive,
            neg_strict_iff_inductive,
        ),
        _law(
            "strict-iff-hom",
            "a map between pointed objects is strict exactly when it is an algebra homomorphism",
            Bounds(max_size=4),
            run_strict_iff_hom,
            neg_strict_iff_hom,
        ),
        _law(
            "monadicity-triple",
            "algebras, pointed objects and inductive partial orders are the same subcategory",
            Bounds(max_size=4),
            run_monadicity,
            neg_monadicity,
        ),
        _law(
            "connected-colimits",
            "connected colimits of algebras are created by the forgetful functor",
            Bounds(max_size=3, apex=6),
            run_connected_colimits,
            neg_connected_colimits,
        ),
        _law(
            "algebras-cocomplete",
            "algebras have coproducts by a reflexive coequaliser, hence all finite colimits",
            Bounds(max_size=3, apex=6),
            run_algebras_cocomplete,
            neg_algebras_cocomplete,
        ),
        _law(
            "colimits-enriched",
            "colimit comparisons reflect the pointwise order along the legs",
            Bounds(max_size=3, apex=6),
            run_colimits_enriched,
            neg_colimits_enriched,
        ),
        _law(
            "smash-presentations",
            "the four coequaliser presentations of the smash product agree, match the direct quotient, and carry the universal bistrict map",
            Bounds(max_size=5, competing=4),
            run_smash_presentations,
            neg_smash_presentations,
        ),
        _law(
            "bistrict-iff-bilinear",
            "a binary map is bistrict exactly when it satisfies the commutator-against-folds square",
            Bounds(max_size=3),
            run_bistrict_iff_bilinear,
            neg_bistrict_iff_bilinear,
        ),
        _law(
            "seal-iso",
            "the algebra tensor and the smash product are isomorphic under the universal maps",
            Bounds(max_size=3),
            run_seal_iso,
            neg_seal_iso,
        ),
        _law(
            "monoidal-adjunction",
            "lifting is strong symmetric monoidal: the commutator descends to an iso, and both symmetry squares commute",
            Bounds(max_size=3),
            run_monoidal_adjunction,
            neg_monoidal_adjunction,
        ),
        _law(
            "tensor-hom",
            "smashing with A is left adjoint to the strict function space out of A",
            Bounds(max_size=3),
            run_tensor_hom,
            neg_tensor_hom,
        ),
        _law(
            "homs-coincide",
            "the strict and linear function spaces are the same subobject of the exponential",
            Bounds(max_size=3),
            run_homs_coincide,
            neg_homs_coincide,
        ),
        _law(
            "phoa",
            "maps out of sigma form the arrow object: the power by the walking arrow",
            Bounds(max_size=4),
            run_phoa,
            neg_phoa,
        ),
        _law(
            "paths",
            "there is at most one path between parallel maps, and one exists exactly when they compare",
            Bounds(max_size=3),
            run_paths,
            neg_paths,
        ),
        _law(
            "top-opfibration",
            "the top point into sigma is an opfibration: its walking-arrow power and comma are points",
            Bounds(),
            run_top_opfibration,
            neg_top_opfibration,
        ),
        _law(
            "nonboolean-lift",
            "over the 2-chain base the classifier is not free on its nonbottom part: the comparison onto the lifted point is not invertible",
            Bounds(),
            run_nonboolean_lift,
            neg_nonboolean_lift,
        ),
        _law(
            "commutative-monad",
            "both iterated extension orders give the same commutator, which is bistrict and restricts to the strength",
            Bounds(max_size=3),
            run_commutative_monad,
            neg_commutative_monad,
        ),
    ]
}


def run_law(name: str, spec: ModelSpec | None = None, bounds: Bounds | None = None,
            backends=("classical", "presheaf")) -> CheckReport:
    """Run one named law over the model within bounds."""
    if name not in REGISTRY:
        raise KeyError(f"unknown law {name!r}; known: {', '.join(REGISTRY)}")
    law = REGISTRY[name]
    spec = spec if spec is not None else default_model()
    b = bounds if bounds is not None else law.bounds
    if b.max_size > 6 or b.apex > 6 or b.competing > 6:
        return make_report(
            name,
            [InstanceReport("bounds", UNAVAILABLE, None)],
            b.as_dict(),
            0,
            reason="requested bounds exceed the supported exhaustion range (6)",
        )
    t0 = time.perf_counter()
    try:
        instances = law.runner(spec, b, backends)
    except UnavailableError as e:
        instances = [InstanceReport("construction", UNAVAILABLE, e.reason)]
    elapsed = int((time.perf_counter() - t0) * 1000)
    reason = None
    if not instances:
        instances = [InstanceReport("no instances in scope", UNAVAILABLE, "nothing to check")]
        reason = "no instances in scope for the selected backends"
    return make_report(name, instances, b.as_dict(), elapsed, reason)


def run_negative(name: str, bounds: Bounds | None = None) -> CheckReport:
    """Run the bundled negative control; the report must come back failing."""
    law = REGISTRY[name]
    b = bounds if bounds is not None else law.bounds
    t0 = time.perf_counter()
    instances = law.negative(b)
    elapsed = int((time.perf_counter() - t0) * 1000)
    return make_report(f"{name}:negative-control", instances, b.as_dict(), elapsed)


def run_all(spec: ModelSpec | None = None, bounds: Bounds | None = None,
            backends=("classical", "presheaf")) -> list[CheckReport]:
    return [run_law(name, spec, bounds, backends) for name in REGISTRY]
