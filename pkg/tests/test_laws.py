import pytest

from liftdom.laws import REGISTRY, Bounds, run_all, run_law, run_negative
from liftdom.model import default_model, parse_model
from liftdom.order import StructureError
from liftdom.report import FAIL, PASS, UNAVAILABLE, CheckReport, InstanceReport


def test_registry_shape():
    assert len(REGISTRY) == 27
    for name, law in REGISTRY.items():
        assert law.name == name
        assert law.statement
        assert isinstance(law.bounds, Bounds)


def test_unknown_law():
    with pytest.raises(KeyError):
        run_law("no-such-law")


def test_default_suite_green():
    for rep in run_all():
        assert rep.status == PASS, (rep.law, [i for i in rep.instances if i.status != PASS])


def test_negative_controls_all_fail_with_witness():
    for name in REGISTRY:
        rep = run_negative(name)
        assert rep.status == FAIL, name
        assert any(i.status == FAIL and i.witness for i in rep.instances), name


def test_reports_deterministic():
    for name in ("kz-adjunction", "nonboolean-lift", "phoa"):
        a = run_law(name).to_json(zero_elapsed=True)
        b = run_law(name).to_json(zero_elapsed=True)
        assert a == b


def test_report_invariants():
    with pytest.raises(StructureError):
        CheckReport("x", FAIL, [InstanceReport("i", FAIL, None)], {}, 0)
    with pytest.raises(StructureError):
        CheckReport("x", UNAVAILABLE, [], {}, 0)
    CheckReport("x", UNAVAILABLE, [], {}, 0, reason="why")


def test_backend_filtering():
    rep = run_law("nonboolean-lift", backends=("classical",))
    assert rep.status == UNAVAILABLE  # the law is presheaf-only
    rep = run_law("joint-epi", backends=("presheaf",))
    assert rep.status == UNAVAILABLE
    rep = run_law("monoidal-adjunction", backends=("presheaf",))
    assert rep.status == UNAVAILABLE
    assert "continuous" in rep.instances[0].witness


def test_model_objects_are_used():
    spec = parse_model(
        "poset Z4 { elems a b c d ; leq a<=b a<=c a<=d b<=d c<=d }"
    )
    rep = run_law("kz-adjunction", spec)
    assert any("model:Z4" in i.objects for i in rep.instances)


def test_oversized_bounds_unavailable():
    rep = run_law("kz-adjunction", bounds=Bounds(max_size=9))
    assert rep.status == UNAVAILABLE
    assert "exceed" in rep.reason


def test_json_schema():
    rep = run_law("phoa")
    d = rep.to_dict()
    assert set(d) == {"law", "status", "instances", "bounds", "elapsed_ms"}
    assert all(set(i) == {"objects", "status", "witness"} for i in d["instances"])
