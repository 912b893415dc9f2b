from itertools import product as iproduct

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from liftdom.order import (
    FinPoset,
    MonotoneMap,
    Preorder,
    StructureError,
    Subset,
    all_posets,
    arrow_poset,
    compose,
    directed_subsets,
    enumerate_monotone_maps,
    hom_poset,
    is_directed,
    is_order_embedding,
    is_semidirected,
    lub,
    map_leq,
    poset_iso,
    poset_reflect,
    posets_upto,
    scott_opens,
    subsets,
)

CHAIN2 = FinPoset.chain(2)
CHAIN3 = FinPoset.chain(3)
ANTI2 = FinPoset.antichain(2)
DIAMOND = FinPoset.from_generators(
    "wxyz", [("w", "x"), ("w", "y"), ("x", "z"), ("y", "z")]
)
EMPTY = FinPoset((), frozenset())


def brute_monotone_maps(A, B):
    # oracle: all |B|^|A| assignments, filtered by the definition
    out = []
    for vals in iproduct(B.elements, repeat=A.n):
        if all(
            B.leq(vals[i], vals[j])
            for i in range(A.n)
            for j in range(A.n)
            if A.leq(A.elements[i], A.elements[j])
        ):
            out.append(vals)
    return out


def test_constructor_rejects_bad_relations():
    with pytest.raises(StructureError) as e:
        FinPoset(("a", "b"), frozenset([("a", "b")]))
    assert e.value.law == "reflexivity"
    with pytest.raises(StructureError) as e:
        FinPoset(
            ("a", "b", "c"),
            frozenset([("a", "a"), ("b", "b"), ("c", "c"), ("a", "b"), ("b", "c")]),
        )
    assert e.value.law == "transitivity"
    with pytest.raises(StructureError) as e:
        FinPoset(
            ("a", "b"),
            frozenset([("a", "a"), ("b", "b"), ("a", "b"), ("b", "a")]),
        )
    assert e.value.law == "antisymmetry"
    with pytest.raises(StructureError):
        FinPoset(("a", "a"), frozenset([("a", "a")]))


def test_semidirected_and_directed():
    assert is_semidirected(ANTI2, Subset(ANTI2, {"a0", "a1"})) is False
    assert is_semidirected(ANTI2, Subset(ANTI2, set())) is True
    assert is_semidirected(CHAIN3, Subset(CHAIN3, {"c1", "c2"})) is True
    assert is_directed(CHAIN3, Subset(CHAIN3, set())) is False
    assert is_directed(CHAIN3, Subset(CHAIN3, {"c1"})) is True
    assert is_directed(ANTI2, Subset(ANTI2, {"a0", "a1"})) is False


def test_lub():
    assert lub(CHAIN3, Subset(CHAIN3, {"c0", "c1"})) == "c1"
    assert lub(ANTI2, Subset(ANTI2, {"a0", "a1"})) is None
    # diamond: upper bounds of {x,y} are {z}; minimum is z
    assert lub(DIAMOND, Subset(DIAMOND, {"x", "y"})) == "z"
    assert lub(CHAIN3, Subset(CHAIN3, set())) == "c0"


def test_directed_lub_is_member():
    for P in posets_upto(4):
        for S in directed_subsets(P):
            v = lub(P, S)
            assert v is not None and v in S.members


def test_scott_opens():
    pt = FinPoset(("p",), frozenset([("p", "p")]))
    assert [set(s.members) for s in scott_opens(pt)] == [set(), {"p"}]
    opens = [frozenset(s.members) for s in scott_opens(CHAIN2)]
    assert set(opens) == {frozenset(), frozenset({"c1"}), frozenset({"c0", "c1"})}
    assert len(scott_opens(ANTI2)) == 4


def test_enumerate_monotone_maps_against_bruteforce():
    assert len(enumerate_monotone_maps(CHAIN2, CHAIN2)) == 3
    assert len(enumerate_monotone_maps(EMPTY, CHAIN3)) == 1
    pt = FinPoset(("p",), frozenset([("p", "p")]))
    assert len(enumerate_monotone_maps(DIAMOND, pt)) == 1
    for A in posets_upto(3):
        for B in posets_upto(3):
            got = [f.values for f in enumerate_monotone_maps(A, B)]
            assert got == sorted(got, key=lambda v: tuple(B.index(x) for x in v))
            assert len(set(got)) == len(got)
            assert set(got) == set(brute_monotone_maps(A, B))


def test_poset_reflect():
    P = Preorder(
        ("a", "b"),
        frozenset([("a", "a"), ("b", "b"), ("a", "b"), ("b", "a")]),
    )
    Q, reps = poset_reflect(P)
    assert Q.n == 1 and reps == {"a": "a", "b": "a"}
    # 4-cycle: everything related
    els = ("p", "q", "r", "s")
    cyc = Preorder(els, frozenset((x, y) for x in els for y in els))
    Q, reps = poset_reflect(cyc)
    assert Q.n == 1 and set(reps.values()) == {"p"}
    # antisymmetric input: identity quotient
    pre = Preorder(CHAIN3.elements, CHAIN3.pairs)
    Q, reps = poset_reflect(pre)
    assert Q == CHAIN3 and all(reps[x] == x for x in CHAIN3.elements)


def test_poset_reflect_idempotent():
    for P in posets_upto(4):
        pre = Preorder(P.elements, P.pairs)
        Q, _ = poset_reflect(pre)
        assert Q == P


def test_is_order_embedding():
    assert is_order_embedding(MonotoneMap.identity(DIAMOND))
    const = MonotoneMap.make(ANTI2, CHAIN2, lambda _: "c0")
    assert not is_order_embedding(const)


def test_poset_iso():
    f, g = poset_iso(DIAMOND, DIAMOND)
    assert compose(g, f) == MonotoneMap.identity(DIAMOND)
    assert poset_iso(CHAIN2, ANTI2) is None
    relabeled = FinPoset.from_generators(
        "abcd", [("b", "a"), ("b", "d"), ("a", "c"), ("d", "c")]
    )
    pair = poset_iso(DIAMOND, relabeled)
    assert pair is not None
    f, g = pair
    assert compose(g, f) == MonotoneMap.identity(DIAMOND)
    assert compose(f, g) == MonotoneMap.identity(relabeled)


def test_arrow_poset():
    pt = FinPoset(("p",), frozenset([("p", "p")]))
    assert arrow_poset(pt).n == 1
    assert arrow_poset(CHAIN2).n == 3
    assert arrow_poset(ANTI2).n == 2


def test_arrow_poset_is_hom_from_chain2():
    # comma-square instance: monotone maps 2-chain -> Y, ordered pointwise
    for Y in posets_upto(4):
        H, _ = hom_poset(CHAIN2, Y)
        assert poset_iso(H, arrow_poset(Y)) is not None


def test_poset_counts():
    # brute-force oracle over all reflexive relations for n <= 3
    def brute_count(n):
        els = tuple(range(n))
        cnt = 0
        offdiag = [(i, j) for i in els for j in els if i != j]
        for mask in range(1 << len(offdiag)):
            pairs = {(i, i) for i in els} | {
                offdiag[k] for k in range(len(offdiag)) if mask >> k & 1
            }
            try:
                FinPoset(els, frozenset(pairs))
                cnt += 1
            except StructureError:
                continue
        return cnt

    from liftdom.order import _labeled_rows

    assert len(_labeled_rows(2)) == brute_count(2) == 3
    assert len(_labeled_rows(3)) == brute_count(3) == 19
    assert [len(all_posets(k)) for k in range(5)] == [1, 1, 2, 5, 16]
    assert len(posets_upto(4, pointed=True)) == 9


def test_map_validation():
    with pytest.raises(StructureError) as e:
        MonotoneMap(CHAIN2, ANTI2, ("a0", "a1"))
    assert e.value.law == "monotonicity"
    with pytest.raises(StructureError):
        MonotoneMap(CHAIN2, CHAIN2, ("c0",))


@st.composite
def small_posets(draw):
    n = draw(st.integers(min_value=0, max_value=4))
    els = tuple(f"e{i}" for i in range(n))
    gens = draw(
        st.lists(
            st.tuples(st.sampled_from(els or ("e0",)), st.sampled_from(els or ("e0",))),
            max_size=6,
        )
    ) if n else []
    rows = {e: {e} for e in els}
    for x, y in gens:
        rows[x].add(y)
    # close transitively, then drop one side of any cycle
    changed = True
    while changed:
        changed = False
        for x in els:
            for y in list(rows[x]):
                extra = rows[y] - rows[x]
                if extra:
                    rows[x] |= extra
                    changed = True
    pairs = {(x, y) for x in els for y in rows[x] if x == y or x not in rows[y]}
    return FinPoset(els, frozenset(pairs))


@given(small_posets(), st.integers(min_value=0, max_value=2**5 - 1))
@settings(max_examples=120, deadline=None)
def test_lub_is_least_upper_bound(P, mask):
    S = Subset(P, frozenset(P.elements[i] for i in range(P.n) if mask >> i & 1))
    v = lub(P, S)
    ubs = [u for u in P.elements if all(P.leq(x, u) for x in S.members)]
    if v is None:
        assert not any(all(P.leq(u, w) for w in ubs) for u in ubs)
    else:
        assert v in ubs and all(P.leq(v, u) for u in ubs)


@given(small_posets(), small_posets())
@settings(max_examples=40, deadline=None)
def test_hom_order_antisymmetric(A, B):
    maps = enumerate_monotone_maps(A, B)
    for f in maps[:6]:
        for g in maps[:6]:
            if map_leq(f, g) and map_leq(g, f):
                assert f == g
