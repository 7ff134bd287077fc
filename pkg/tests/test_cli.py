import json

import pytest

from arulayout import fixtures, io
from arulayout.cli import run
from arulayout.dualgraph import dual

from conftest import BRICK_ALPHA, path_graph, sliceable_count


def _write(path, data):
    path.write_text(json.dumps(data))
    return str(path)


@pytest.fixture
def files(tmp_path):
    return {
        "brick": _write(tmp_path / "brick.json", io.layout_to_json(fixtures.brick())),
        "pinwheel": _write(tmp_path / "pinwheel.json", io.layout_to_json(fixtures.pinwheel())),
        "stack": _write(tmp_path / "stack.json", io.layout_to_json(fixtures.stack3())),
        "brick2112": _write(tmp_path / "brick2112.json", io.assignment_to_json(BRICK_ALPHA)),
        "path3": _write(tmp_path / "path3.json", io.graph_to_json(path_graph(3))),
        "tmp": tmp_path,
    }


def _out(capsys):
    return json.loads(capsys.readouterr().out)


def test_recognize_path(files, capsys):
    assert run(["recognize", files["path3"]]) == 0
    out = _out(capsys)
    assert out["realizable"] and len(out["layout"]["rects"]) == 3
    assert set(out["vertex_map"]) == {"r1", "r2", "r3"}


def test_recognize_layout_input(files, capsys):
    assert run(["recognize", files["brick"]]) == 0
    assert _out(capsys)["realizable"]


def test_realize_brick(files, capsys):
    target = files["tmp"] / "out.json"
    assert run(["realize", files["brick"], files["brick2112"], "--mode", "strong", "-o", str(target)]) == 1
    out = _out(capsys)
    assert not out["equivalent"]
    assert [(c["a"], c["b"]) for c in out["gained"]] == [("r1", "r4")]
    assert len(io.layout_from_json(json.loads(target.read_text()))) == 4


def test_realize_weak_brick(files, capsys):
    assert run(["realize", files["brick"], files["brick2112"], "--mode", "weak"]) == 0


def test_realize_seeded_is_reproducible(files, capsys):
    assert run(["realize", files["stack"], "--seed", "7"]) == 0
    first = capsys.readouterr().out
    assert run(["realize", files["stack"], "--seed", "7"]) == 0
    assert capsys.readouterr().out == first


def test_census(capsys):
    assert run(["census", "4"]) == 0
    assert _out(capsys)["sliceable"] == sliceable_count(4) == 22


def test_census_lines(capsys):
    assert run(["census", "3", "--all"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert [json.loads(x)["n"] for x in lines] == [1, 2, 3]


def test_census_cap(capsys):
    assert run(["census", "9"]) == 2


def test_classify(files, capsys):
    assert run(["classify", files["brick"]]) == 0
    out = _out(capsys)
    assert out["aru_class"] == "WeaklyARUOnly"
    assert out["witness_segment_or_windmill"]["segment"]["orientation"] == "V"
    assert run(["classify", files["pinwheel"]]) == 0
    assert _out(capsys)["witness_segment_or_windmill"]["windmill"]["center"] == "c"


def test_witness(files, capsys):
    assert run(["witness", files["brick"]]) == 0
    assert _out(capsys) == {"kind": "brick", "ratios": {"r1": "2", "r2": "1", "r3": "1", "r4": "2"}}
    assert run(["witness", files["stack"]]) == 1


def test_render(files):
    target = files["tmp"] / "p.svg"
    assert run(["render", files["pinwheel"], "--windmill", "-o", str(target)]) == 0
    assert target.read_text().count("<line") == 4


def test_bad_inputs(files, capsys):
    bad = files["tmp"] / "bad.json"
    bad.write_text("{")
    assert run(["classify", str(bad)]) == 2
    assert run(["classify", str(files["tmp"] / "missing.json")]) == 2
    assert run(["realize", files["pinwheel"]]) == 2
    assert capsys.readouterr().out == ""


def test_negative_recognition(tmp_path, capsys):
    from arulayout.enumeration import dual_catalog

    g = dual_catalog(6)[1][0]
    assert run(["recognize", _write(tmp_path / "g.json", io.graph_to_json(g))]) == 1
    assert _out(capsys) == {"realizable": False}
