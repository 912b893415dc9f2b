"""Bounded search for an algebra that is not free on its positive part.

Enumerates algebra carriers over small base posets, computes the positive
elements, builds the lift of the positive part and the canonical strict
extension of its inclusion, and records every instance where that map
fails to be an isomorphism.  Any hit is re-verified independently
(positivity recomputed from the forcing definition, the iso failure
re-checked by exhaustive iso search) before being reported.  No outcome is
asserted: the report is data.
"""
from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import product as iproduct

from .backend import ClassicalBackend, PresheafBackend, UnavailableError
from .lifting import free_on_positives_check
from .order import FinPoset, StructureError, posets_upto, _labeled_rows, _rows_to_poset
from .presheaf import (
    BasePoset,
    InternalPoset,
    is_internal_dcpo,
    is_internal_pointed,
)
from .report import FAIL, PASS, UNAVAILABLE, CheckReport, InstanceReport, fmt, make_report


@dataclass(frozen=True)
class OQ1Bounds:
    max_base: int = 2  # stages in the base poset
    max_stage: int = 3  # elements per stage
    max_carrier: int = 5  # total elements across stages

    def as_dict(self) -> dict:
        return {
            "max_base": self.max_base,
            "max_stage": self.max_stage,
            "max_carrier": self.max_carrier,
        }


def _labeled_posets_named(n: int, prefix: str) -> list[FinPoset]:
    return [
        _rows_to_poset(rows, prefix=prefix) for rows in _labeled_rows(n)
    ]


def candidate_algebras(base: BasePoset, bounds: OQ1Bounds):
    """All pointed internal dcpos over the base within the size bounds."""
    stages = base.stages
    size_ranges = [range(1, bounds.max_stage + 1) for _ in stages]
    for sizes in iproduct(*size_ranges):
        if sum(sizes) > bounds.max_carrier:
            continue
        per_stage = [
            _labeled_posets_named(k, prefix=f"{p}_") for k, p in zip(sizes, stages)
        ]
        for stage_posets in iproduct(*per_stage):
            sets = {p: P.elements for p, P in zip(stages, stage_posets)}
            orders = {p: P.pairs for p, P in zip(stages, stage_posets)}
            res_choices = []
            pairs = base.strict_pairs()
            for p, q in pairs:
                src = sets[p]
                tgt = sets[q]
                res_choices.append(list(iproduct(tgt, repeat=len(src))))
            for combo in iproduct(*res_choices):
                restrictions = {
                    pair: dict(zip(sets[pair[0]], values))
                    for pair, values in zip(pairs, combo)
                }
                try:
                    A = InternalPoset.make(base, sets, restrictions, orders)
                except StructureError:
                    continue
                if not is_internal_pointed(A):
                    continue
                ok, _ = is_internal_dcpo(A)
                if not ok:
                    continue
                yield A


def _small_bases(bounds: OQ1Bounds) -> list[tuple]:
    out = []
    for n in range(1, bounds.max_base + 1):
        for i, P in enumerate(posets_upto(n)):
            if P.n != n:
                continue
            renamed = FinPoset(
                tuple(f"s{k}" for k in range(P.n)),
                frozenset(
                    (f"s{P.index(x)}", f"s{P.index(y)}") for x, y in P.pairs
                ),
            )
            out.append((f"base{n}.{i}", BasePoset(renamed)))
    return out


def positivity_by_forcing(X: InternalPoset) -> dict:
    """Positivity recomputed through the formula interpreter.

    For each candidate element and each subpresheaf D, the statement
    "if s bounds D, s is below every bound of D, and x <= s, then D is
    inhabited" is built as a first-order formula (with semidirectedness of
    D as a side condition) and handed to the forcing clauses; nothing is
    shared with the arithmetic of internal_sup.
    """
    from .presheaf import (
        And,
        Const,
        Exists,
        ForAll,
        Implies,
        Leq,
        TrueF,
        Var,
        kj_forces,
        semidirectedness_formula,
        subpresheaves_below,
    )

    base = X.base
    out = {}
    for p in base.stages:
        good = set()
        for x in X.at(p):
            ok = True
            for q in base.down_list(p):
                if not ok:
                    break
                xq = Const(X, p, x)
                for D in subpresheaves_below(X, q):
                    if not kj_forces(base, q, semidirectedness_formula(D)):
                        continue
                    is_bound = ForAll("d", D, Leq(Var("d"), Var("s")))
                    is_least = ForAll(
                        "t",
                        X,
                        Implies(ForAll("d", D, Leq(Var("d"), Var("t"))), Leq(Var("s"), Var("t"))),
                    )
                    dominated = Exists(
                        "s", X, And(And(is_bound, is_least), Leq(xq, Var("s")))
                    )
                    inhabited = Exists("d", D, TrueF())
                    if not kj_forces(base, q, Implies(dominated, inhabited)):
                        ok = False
                        break
            if ok:
                good.add(x)
        out[p] = frozenset(good)
    return out


def reverify_failure(bk, X) -> bool:
    """Independent confirmation of a counterexample candidate: positivity is
    recomputed from the forcing clauses, and the failure of the canonical
    map is re-established by exhaustive iso search."""
    members = positivity_by_forcing(X)
    if members != bk.positive_elements(X):
        return False
    P, _ = bk.subobject(X, members)
    ld = bk.lift(P)
    return bk.iso(ld.obj, X) is None


def search_open_question_1(
    bounds: OQ1Bounds | None = None, time_budget_s: float | None = None
) -> CheckReport:
    """Run the bounded search; failures are candidate counterexamples.

    If a time budget is given and exceeded, the search stops early and the
    report carries a truncation marker instead of silently narrowing.
    """
    bounds = bounds or OQ1Bounds()
    t0 = time.perf_counter()

    def out_of_time() -> bool:
        return time_budget_s is not None and time.perf_counter() - t0 > time_budget_s

    instances = []
    cl = ClassicalBackend()
    classical_failures = 0
    for i, X in enumerate(posets_upto(min(bounds.max_carrier, 4), pointed=True)):
        ok, _h = free_on_positives_check(cl, X)
        if not ok:
            classical_failures += 1
            instances.append(
                InstanceReport(f"classical#{i}", FAIL, f"not free on positives: {fmt(X)}")
            )
    instances.append(
        InstanceReport(
            f"classical lane (pointed ≤ {min(bounds.max_carrier, 4)})",
            PASS if classical_failures == 0 else FAIL,
            f"{classical_failures} failures",
        )
    )
    truncated = False
    for base_name, base in _small_bases(bounds):
        if truncated:
            break
        bk = PresheafBackend(base)
        checked = 0
        hits = 0
        for A in candidate_algebras(base, bounds):
            if out_of_time():
                truncated = True
                instances.append(
                    InstanceReport(
                        f"{base_name}: search truncated after {checked} algebras",
                        UNAVAILABLE,
                        f"time budget of {time_budget_s}s exceeded; report is partial",
                    )
                )
                break
            checked += 1
            try:
                ok, _h = free_on_positives_check(bk, A)
            except UnavailableError as e:
                instances.append(
                    InstanceReport(f"{base_name}:carrier#{checked}", UNAVAILABLE, e.reason)
                )
                continue
            if not ok:
                confirmed = reverify_failure(bk, A)
                hits += 1
                status = FAIL if confirmed else UNAVAILABLE
                instances.append(
                    InstanceReport(
                        f"{base_name}:carrier#{checked}",
                        status,
                        ("confirmed candidate: " if confirmed else "unconfirmed: ")
                        + fmt(A),
                    )
                )
        instances.append(
            InstanceReport(
                f"{base_name} ({checked} algebras searched)",
                PASS,
                f"{hits} candidate counterexamples",
            )
        )
    elapsed = int((time.perf_counter() - t0) * 1000)
    return make_report("search-oq1", instances, bounds.as_dict(), elapsed)
