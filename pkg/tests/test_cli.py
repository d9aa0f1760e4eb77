import json

from weylkit.cli import main


def write(tmp_path, name, obj):
    p = tmp_path / name
    p.write_text(json.dumps(obj))
    return str(p)


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip().startswith("{") else out)


def test_padic_311_flags(capsys):
    code, rep = run(capsys, ["padic", "--p", "3", "--k", "1", "--d", "1"])
    assert code == 0
    assert rep["pass"] is True
    assert rep["summary"]["vacuum_dim"] == 1


def test_padic_211_scenario(tmp_path, capsys):
    path = write(tmp_path, "s.json", {"task": "padic", "padic": {"p": 2, "k": 1, "d": 1}})
    code, rep = run(capsys, ["padic", "--scenario", path])
    assert code == 0
    assert rep["summary"]["vacuum_dim"] == 2
    assert rep["summary"]["clifford_residual_max"] <= 1e-9


def test_reports_byte_identical(tmp_path):
    path = write(tmp_path, "s.json", {"task": "padic", "padic": {"p": 2, "k": 1, "d": 1}})
    out1, out2 = str(tmp_path / "r1.json"), str(tmp_path / "r2.json")
    assert main(["padic", "--scenario", path, "--out", out1]) == 0
    assert main(["padic", "--scenario", path, "--out", out2]) == 0
    assert open(out1, "rb").read() == open(out2, "rb").read()


def test_verify_pass_and_heisenberg(tmp_path, capsys):
    sc = {
        "task": "verify",
        "group": {"moduli": [3, 3]},
        "multiplier": {"type": "weyl_product", "left_rank": 1, "pairing": [["1/3"]]},
    }
    code, rep = run(capsys, ["verify", "--scenario", write(tmp_path, "v.json", sc)])
    assert code == 0
    assert rep["summary"]["is_heisenberg"] is True


def test_verify_corrupted_table_exits_1(tmp_path, capsys):
    # a single nonzero entry on Z/3 cannot satisfy the cocycle identity
    values = [["0", "0", "0"], ["0", "1/3", "0"], ["0", "0", "0"]]
    sc = {
        "task": "verify",
        "group": {"moduli": [3]},
        "multiplier": {"type": "table", "values": values},
    }
    code, rep = run(capsys, ["verify", "--scenario", write(tmp_path, "v.json", sc)])
    assert code == 1
    failing = [c for c in rep["checks"] if not c["pass"]]
    assert failing and failing[0].get("witness")


def test_isotropy_task(tmp_path, capsys):
    sc = {
        "task": "isotropy",
        "group": {"moduli": [4, 4]},
        "multiplier": {"type": "bicharacter", "B": [["0", "1/4"], ["-1/4", "0"]]},
        "subgroup": {"generators": [[2, 0], [0, 2]]},
    }
    code, rep = run(capsys, ["isotropy", "--scenario", write(tmp_path, "i.json", sc)])
    assert code == 0
    assert rep["summary"]["maximal"] is True
    assert rep["summary"]["polar_tilde_order"] == 16


def test_model_task_with_dump(tmp_path, capsys):
    sc = {
        "task": "model",
        "group": {"moduli": [2, 2]},
        "multiplier": {"type": "table",
                       "values": [["0", "0", "0", "0"],
                                  ["0", "0", "0", "0"],
                                  ["0", "1/2", "0", "1/2"],
                                  ["0", "1/2", "0", "1/2"]]},
        "subgroup": {"generators": [[1, 0]]},
    }
    code, rep = run(capsys, ["model", "--scenario", write(tmp_path, "m.json", sc),
                             "--check-law", "--commutant", "--dump-matrices"])
    assert code == 0
    assert rep["summary"]["dimension"] == 2
    assert rep["summary"]["commutant_dimension"] == 1
    dump = rep["summary"]["matrices"]
    assert len(dump) == 4
    assert all("permutation" in entry for entry in dump)


def test_vacuum_task(tmp_path, capsys):
    sc = {
        "task": "vacuum",
        "group": {"moduli": [9, 9]},
        "multiplier": {"type": "bicharacter", "B": [["0", "1/9"], ["-1/9", "0"]]},
        "subgroup": {"generators": [[3, 0], [0, 3]]},
    }
    code, rep = run(capsys, ["vacuum", "--scenario", write(tmp_path, "v.json", sc)])
    assert code == 0
    assert rep["summary"]["vacuum_dim"] == 1
    assert rep["summary"]["labeled_by_cosets"] is True


def test_fermion_task(tmp_path, capsys):
    sc = {
        "task": "fermion",
        "group": {"moduli": [4, 4]},
        "multiplier": {"type": "bicharacter", "B": [["0", "1/4"], ["-1/4", "0"]]},
        "subgroup": {"generators": [[2, 0], [0, 2]]},
        "model": {"type": "window", "p": 2, "k": 1, "d": 1},
    }
    code, rep = run(capsys, ["fermion", "--scenario", write(tmp_path, "f.json", sc)])
    assert code == 0
    assert rep["summary"]["v2_order"] == 4
    assert rep["summary"]["d"] == 1
    assert rep["summary"]["clifford_gram"] == [[0, 1], [1, 0]]


def test_svn_task_f2(tmp_path, capsys):
    sc = {
        "task": "svn",
        "group": {"moduli": [2, 2]},
        "multiplier": {"type": "table",
                       "values": [["0", "0", "0", "0"],
                                  ["0", "0", "0", "0"],
                                  ["0", "1/2", "0", "1/2"],
                                  ["0", "1/2", "0", "1/2"]]},
        "subgroups": [{"generators": [[1, 0]]}, {"generators": [[0, 1]]}],
    }
    code, rep = run(capsys, ["svn", "--scenario", write(tmp_path, "s.json", sc)])
    assert code == 0
    assert rep["summary"]["intertwiner_dimension"] == 1
    assert rep["summary"]["unitary_defect"] <= 1e-9


def test_svn_same_subgroup_twice(tmp_path, capsys):
    sc = {
        "task": "svn",
        "group": {"moduli": [9, 9]},
        "multiplier": {"type": "bicharacter", "B": [["0", "1/9"], ["-1/9", "0"]]},
        "subgroups": [{"generators": [[3, 0], [0, 3]]}, {"generators": [[3, 0], [0, 3]]}],
    }
    code, rep = run(capsys, ["svn", "--scenario", write(tmp_path, "s.json", sc)])
    assert code == 0
    assert rep["summary"]["intertwiner_dimension"] == 1


def test_svn_distinct_subgroups_z9(tmp_path, capsys):
    sc = {
        "task": "svn",
        "group": {"moduli": [9, 9]},
        "multiplier": {"type": "bicharacter", "B": [["0", "1/9"], ["-1/9", "0"]]},
        "subgroups": [{"generators": [[3, 0], [0, 3]]}, {"generators": [[1, 0]]}],
    }
    code, rep = run(capsys, ["svn", "--scenario", write(tmp_path, "s.json", sc)])
    assert code == 0
    assert rep["summary"]["intertwiner_dimension"] == 1
    assert rep["summary"]["unitary_defect"] <= 1e-9


def test_svn_rejects_non_maximal(tmp_path, capsys):
    sc = {
        "task": "svn",
        "group": {"moduli": [9, 9]},
        "multiplier": {"type": "bicharacter", "B": [["0", "1/9"], ["-1/9", "0"]]},
        "subgroups": [{"generators": [[3, 0]]}, {"generators": [[1, 0]]}],
    }
    code = main(["svn", "--scenario", write(tmp_path, "s.json", sc)])
    assert code == 2


def test_malformed_json_exits_2(tmp_path, capsys):
    p = tmp_path / "bad.json"
    p.write_text('{"task": "padic", "padic": {')
    code = main(["padic", "--scenario", str(p)])
    assert code == 2
    err = capsys.readouterr().err
    assert "line" in err and "column" in err


def test_unknown_field_rejected(tmp_path, capsys):
    sc = {"task": "padic", "padic": {"p": 3, "k": 1, "d": 1}, "bogus": 1}
    code = main(["padic", "--scenario", write(tmp_path, "s.json", sc)])
    assert code == 2
    assert "bogus" in capsys.readouterr().err


def test_task_mismatch_rejected(tmp_path, capsys):
    sc = {"task": "padic", "padic": {"p": 3, "k": 1, "d": 1}}
    code = main(["verify", "--scenario", write(tmp_path, "s.json", sc)])
    assert code == 2


def test_text_format(tmp_path, capsys):
    path = write(tmp_path, "s.json", {"task": "padic", "padic": {"p": 3, "k": 1, "d": 1}})
    code, out = run(capsys, ["padic", "--scenario", path, "--format", "text"])
    assert code == 0
    assert "[pass]" in out
