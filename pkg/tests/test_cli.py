import json

from tlimm import cli, immanant, perm, render, tl


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_coeff(capsys):
    code, out = run(capsys, "coeff", "2143", "4321", "--method", "both")
    assert code == 0 and out.strip() == "2 2 OK"
    code, out = run(capsys, "coeff", "2143", "2143")
    assert code == 0 and out.strip() == "1"
    code, out = run(capsys, "coeff", "2143", "2134", "--method", "formula")
    assert code == 0 and out.strip() == "0"


def test_coeff_error_codes(capsys):
    assert cli.main(["coeff", "21x3", "4321"]) == cli.EXIT_PARSE
    assert cli.main(["coeff", "321", "123"]) == cli.EXIT_PRECONDITION
    assert cli.main(["coeff", "2143", "123"]) == cli.EXIT_PRECONDITION


def test_ncm_and_hull(capsys):
    code, out = run(capsys, "ncm", "2341")
    assert code == 0 and out.strip() == "1-3' 2-4' 3-4 1'-2'"
    code, out = run(capsys, "hull", "2143")
    assert code == 0
    assert json.loads(out) == {"n": 4, "lambda": [4, 4, 4, 3], "mu": [1, 0, 0, 0]}


def test_decompose_and_classify(capsys):
    code, out = run(capsys, "decompose", "24153")
    assert code == 0 and json.loads(out) == {"kind": "none"}
    code, out = run(capsys, "classify", "24153")
    assert json.loads(out)["variant"] == "case2"
    code, out = run(capsys, "decompose", "2143")
    data = json.loads(out)
    assert data["kind"] == "two"
    shapes = [immanant.SkewShape.from_json(s) for s in data["shapes"]]
    assert shapes[0] == immanant.hull((2, 1, 4, 3))


def test_immanant_json_roundtrip(capsys):
    code, out = run(capsys, "immanant", "2143")
    assert code == 0
    assert immanant.Immanant.from_json(json.loads(out)) == immanant.tl_immanant(
        (2, 1, 4, 3)
    )
    code, table_out = run(capsys, "immanant", "2143", "--format", "table")
    assert "4321\t2" in table_out


def test_expand(capsys):
    code, out = run(capsys, "expand", "2143")
    data = json.loads(out)
    assert data["kind"] == "signed" and len(data["terms"]) == 4
    code, out = run(capsys, "expand", "3142")
    data = json.loads(out)
    assert data["kind"] == "rectangle"
    assert data["terms"] == [
        {"sign": 1, "I": [2, 4], "J": [1, 2]},
        {"sign": 1, "I": [3, 4], "J": [1, 2]},
    ]


def test_classes(capsys):
    code, out = run(capsys, "classes", "3")
    data = json.loads(out)
    assert data["n"] == 3 and len(data["classes"]) == 6


def test_eval(tmp_path, capsys):
    f = immanant.determinant_immanant(2)
    imm_file = tmp_path / "imm.json"
    imm_file.write_text(json.dumps(f.to_json()))
    mat_file = tmp_path / "mat.json"
    mat_file.write_text('[["1/2", "1"], ["1", "2"]]')
    code, out = run(capsys, "eval", str(imm_file), str(mat_file))
    assert code == 0 and out.strip() == "0"
    mat_file.write_text('[["1/2", "1"], ["1", "3"]]')
    code, out = run(capsys, "eval", str(imm_file), str(mat_file))
    assert out.strip() == "1/2"


def test_verify_cli(capsys):
    code, out = run(capsys, "verify", "--suite", "A6", "--n", "5")
    assert code == 0
    assert "A6 n=5" in out and "0 failures" in out


def test_verify_jobs(capsys):
    code, out = run(capsys, "verify", "--suite", "A1", "--n", "4", "--jobs", "2")
    assert code == 0 and "A1 n=4" in out


def test_render_paths(capsys):
    code, out = run(capsys, "render", "ncm", "2341")
    assert code == 0 and "1'" in out
    code, svg = run(capsys, "render", "ncm", "1-2 1'-2'", "--format", "svg")
    assert svg.startswith("<svg") and "</svg>" in svg
    code, out = run(capsys, "render", "hull", "2143")
    assert out.splitlines()[0] == ". # # #"
    code, out = run(
        capsys, "render", "shape",
        json.dumps({"n": 2, "lambda": [2, 1], "mu": [1]}),
    )
    assert out == ". #\n# .\n"
    code, svg = run(capsys, "render", "hull", "2143", "--format", "svg")
    assert svg.count("<rect") == 16


def test_render_shape_from_file(tmp_path, capsys):
    path = tmp_path / "shape.json"
    path.write_text(json.dumps(immanant.hull((2, 1, 4, 3)).to_json()))
    code, out = run(capsys, "render", "shape", f"@{path}")
    assert code == 0 and out.splitlines()[0] == ". # # #"


def test_render_matching_shows_all_pairs():
    for w in perm.avoiding_321(5):
        art = render.matching_ascii(tl.beta(w))
        assert len(art.splitlines()) == 5
        assert "5'" in art


def test_output_determinism(capsys):
    _, first = run(capsys, "expand", "24153")
    _, second = run(capsys, "expand", "24153")
    assert first == second
    _, a = run(capsys, "immanant", "214365")
    _, b = run(capsys, "immanant", "214365")
    assert a == b
