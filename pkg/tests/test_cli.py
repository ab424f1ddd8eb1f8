import io
import json
import random
from pathlib import Path

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lmalg.cli import (
    DocumentInvariantError,
    DocumentSchemaError,
    DocumentSyntaxError,
    canonical_json,
    emit_report,
    main,
    parse_document,
    random_document,
    run_command,
    serialize_document,
    to_payload,
)
from lmalg.construct import build_T
from lmalg.boolalg import FiniteBooleanAlgebra
from lmalg.lm import swap_unary

FIX = Path(__file__).parent / "fixtures"


def run(argv, stdin_text=""):
    r, code = run_command(argv, io.StringIO(stdin_text))
    return r, code


def test_parse_examples():
    d = parse_document('{"kind":"bool","atoms":["p","q"]}')
    assert d.kind == "bool" and d.value.size == 4
    d = parse_document('{"kind":"boolideals","n":3,"atoms":["p"],"generators":[1,1]}')
    assert d.value.ideal(1).generator == d.value.base.top
    with pytest.raises(DocumentInvariantError, match="symmetric"):
        parse_document('{"kind":"boolideals","n":3,"atoms":["p","q"],"generators":[1,0]}')


def test_error_classes_are_distinct():
    with pytest.raises(DocumentSyntaxError) as e:
        parse_document('{"kind": "bool",\n "atoms": [}')
    assert e.value.line == 2
    with pytest.raises(DocumentSchemaError):
        parse_document('{"kind":"bool"}')
    with pytest.raises(DocumentSchemaError):
        parse_document('{"kind":"graph"}')
    with pytest.raises(DocumentSchemaError):
        parse_document('[1,2]')
    with pytest.raises(DocumentInvariantError):
        parse_document('{"kind":"bool","atoms":["p","p"]}')
    with pytest.raises(DocumentInvariantError):
        parse_document('{"kind":"space","n":2,"points":["x"],"opens":[[3]]}')
    with pytest.raises(DocumentInvariantError):
        parse_document('{"kind":"mv","size":2,"zero":0,"oplus":[[0,1],[1,5]],"star":[1,0]}')


def test_gen_canonical_document():
    r, code = run(["gen", "canonical", "--n", "3"])
    assert code == 0 and r.document["size"] == 4
    assert r.document == json.loads((FIX / "pass_canonical3.json").read_text())


def test_golden_T():
    r, _ = run(["gen", "t", "--atoms", "2", "--n", "2", "--format", "document"])
    assert emit_report(r, "document") == (FIX / "golden_T_2_2.json").read_text()


def test_fixture_exit_codes():
    assert run(["check", "--system", "L", str(FIX / "pass_canonical3.json")])[1] == 0
    assert run(["check", "--system", "L", str(FIX / "violate_swapped_phi.json")])[1] == 1
    for bad in ("malformed.json", "asymmetric.json", "schema_bad.json"):
        r, code = run(["check", "--system", "proper", str(FIX / bad)])
        assert code == 2 and r.verdict == "error"


def test_report_shape():
    r, _ = run(["check", "--system", "L", str(FIX / "pass_canonical3.json")])
    d = json.loads(emit_report(r, "json"))
    assert d["verdict"] == "pass" and d["violations"] == []
    assert d["stats"]["laws_checked"] > 0
    assert list(d) == sorted(d)


def test_laws_checked_is_sum_over_laws():
    from lmalg.lm import canonical, check_axioms

    r, _ = run(["check", "--system", "L", str(FIX / "pass_canonical3.json")])
    assert r.stats["laws_checked"] == check_axioms(canonical(3), "L_SYSTEM").laws_checked


def test_l5_violation_renders_tuple(tmp_path):
    T = build_T(FiniteBooleanAlgebra(("a", "b")), 2).algebra
    bad = swap_unary(T, 1, 2)
    p = tmp_path / "bad.json"
    p.write_text(serialize_document(bad))
    r, code = run(["check", "--system", "L", str(p)])
    assert code == 1
    v = r.violations[0]
    assert v["law"] == "L5"
    assert isinstance(v["witness"]["x"], int)
    assert "(" in v["rendering"] and "," in v["rendering"]
    text = emit_report(r, "text")
    assert "violation L5" in text


def test_unknown_command_and_usage():
    assert run(["frobnicate"])[1] == 2
    assert run(["check"])[1] == 2
    assert run(["check", "--system", "J", str(FIX / "pass_canonical3.json")])[1] == 2
    assert run(["check", "--system", "mv", str(FIX / "pass_canonical3.json")])[1] == 2
    assert run(["check", "--system", "L", "/nonexistent/file.json"])[1] == 2


def test_convert_round_trip_byte_exact():
    src = (FIX / "pass_canonical3.json").read_text()
    r, _ = run(["convert", "--to", "j"], src)
    mid = canonical_json(r.document)
    r2, code = run(["convert", "--to", "phi"], mid)
    assert code == 0 and canonical_json(r2.document) == src


def test_convert_non_lm_input_is_violation():
    r, code = run(["convert", "--to", "j", str(FIX / "violate_swapped_phi.json")])
    assert code == 1 and r.document is None


def test_dualize_roundtrip():
    doc = '{"kind":"boolideals","n":6,"atoms":["p","q"],"generators":[0,1,2,1,0]}'
    r, code = run(["dualize", "--roundtrip"], doc)
    assert code == 0 and r.document["kind"] == "space"
    back, _ = run(["dualize"], canonical_json(r.document))
    assert canonical_json(back.document) == canonical_json(json.loads(doc))


def test_proper_and_somv():
    doc = '{"kind":"boolideals","n":6,"atoms":["p","q"],"generators":[0,1,2,1,0]}'
    r, code = run(["check", "--system", "proper"], doc)
    assert code == 1 and r.violations[0]["witness"] == {"i": 4, "k": 2}
    sp, _ = run(["dualize"], doc)
    r, code = run(["check", "--system", "somv"], canonical_json(sp.document))
    assert code == 1 and r.violations[0]["witness"] == {"i": 4, "k": 2}


def test_mv_commands():
    r, _ = run(["gen", "mvchain", "--n", "3"])
    doc = canonical_json(r.document)
    assert run(["check", "--system", "mv"], doc)[1] == 0
    assert run(["check", "--system", "mvn"], doc)[1] == 0
    r, code = run(["check", "--system", "mvn", "--n", "2", "--format", "text"], doc)
    assert code == 1 and "x=1/3" in emit_report(r, "text")


def test_center_lambda_sigma_represent():
    r, _ = run(["gen", "j", "--atoms", "2", "--n", "3"])
    doc = canonical_json(r.document)
    c, code = run(["center"], doc)
    assert code == 0 and c.document == {"kind": "bool", "atoms": c.document["atoms"]}
    assert len(c.document["atoms"]) == 2
    lam, code = run(["lambda"], doc)
    assert code == 0 and lam.document["generators"] == [3, 3]
    sig, code = run(["sigma"], canonical_json(lam.document))
    assert code == 0 and sig.document["size"] == 16
    rep, code = run(["represent"], doc)
    assert code == 0 and rep.info["components"] == 2 and rep.info["isomorphism"]


def test_gen_sigma():
    r, code = run(["gen", "sigma", "--atom-names", "a,b", "--n", "2", "--generators", "1"])
    assert code == 0 and r.document["size"] == 6 and r.document["signature"] == "j"
    r, code = run(["gen", "sigma", "--atoms", "2", "--n", "3", "--generators", "1,0"])
    assert code == 2


def test_verify_small():
    r, code = run(["verify", "--suite", "all", "--max-atoms", "2", "--max-n", "4", "--mutants", "20"])
    assert code == 0 and r.verdict == "pass"
    assert set(r.stats["suite_seconds"]) >= {"axioms", "duality", "mv", "equivalence", "adjunction"}


def test_main_writes_stdout(capsys, tmp_path):
    code = main(["check", "--system", "L", str(FIX / "pass_canonical3.json"), "--format", "text"])
    out = capsys.readouterr().out
    assert code == 0 and "verdict: pass" in out


@given(st.integers(0, 10_000))
def test_serialization_round_trip_property(seed):
    payload = random_document(random.Random(seed))
    text = serialize_document(payload)
    assert serialize_document(parse_document(text)) == text
    assert json.loads(text) == to_payload(payload)
