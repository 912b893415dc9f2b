import json

import pytest

from liftdom.cli import main


def test_check_single_law(capsys):
    assert main(["check", "kz-adjunction"]) == 0
    out = capsys.readouterr().out
    assert "kz-adjunction" in out and "PASS" in out


def test_check_unknown_law(capsys):
    assert main(["check", "definitely-not-a-law"]) == 2
    assert "unknown law" in capsys.readouterr().err


def test_check_json(capsys):
    assert main(["check", "nonboolean-lift", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload[0]["law"] == "nonboolean-lift"
    assert payload[0]["status"] == "pass"
    assert {"objects", "status", "witness"} == set(payload[0]["instances"][0])


def test_check_backend_filter(capsys):
    assert main(["check", "monoidal-adjunction", "--backend", "presheaf"]) == 2
    out = capsys.readouterr().out
    assert "n/a" in out


def test_check_max_size(capsys):
    assert main(["check", "kz-adjunction", "--max-size", "2"]) == 0
    out = capsys.readouterr().out
    assert "genP3" not in out


def test_lift_and_smash(capsys):
    assert main(["lift", "C2"]) == 0
    assert "3 elements" in capsys.readouterr().out
    assert main(["smash", "C3", "C3"]) == 0
    assert "5 elements" in capsys.readouterr().out
    assert main(["tensor", "C2", "C2"]) == 0
    assert "2 elements" in capsys.readouterr().out
    assert main(["hom", "C2", "C3"]) == 0
    capsys.readouterr()


def test_lift_internal_poset(capsys):
    assert main(["lift", "IP1"]) == 0
    out = capsys.readouterr().out
    assert "stage s1" in out and "stage s0" in out


def test_mixed_backends_rejected(capsys):
    assert main(["smash", "C2", "IP1"]) == 2
    assert "same backend" in capsys.readouterr().err


def test_model_file(tmp_path, capsys):
    f = tmp_path / "m.liftdom"
    f.write_text("poset P { elems a b ; leq a<=b }\n")
    assert main(["lift", "P", "--model", str(f)]) == 0
    capsys.readouterr()
    bad = tmp_path / "bad.liftdom"
    bad.write_text("poset P { elems a b c ; leq a<=b b<=c }\n")
    assert main(["lift", "P", "--model", str(bad)]) == 2
    err = capsys.readouterr().err
    assert "transitivity" in err


def test_export_dot(capsys):
    assert main(["export-dot", "C2"]) == 0
    out = capsys.readouterr().out
    assert out.count("label") == 2 and out.count("->") == 1
    assert main(["export-dot", "IP1"]) == 0
    out = capsys.readouterr().out
    assert "cluster_0" in out and "cluster_1" in out


def test_unresolved_object(capsys):
    assert main(["lift", "NOPE"]) == 2
    assert "unresolved" in capsys.readouterr().err


def test_search_oq1_bounded(capsys):
    # a degenerate search: no presheaf bases, classical lane only
    assert main(["search-oq1", "--max-base", "0", "--max-carrier", "4"]) == 0
    out = capsys.readouterr().out
    assert "search-oq1" in out and "0 failures" in out
