import json

from weylnorm import cli, golden


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_show_counts(capsys):
    code, out, _ = run_cli(capsys, "show", "G2")
    assert code == 0
    assert "2 simple roots, 6 positive roots" in out
    code, out, _ = run_cli(capsys, "show", "E8")
    assert code == 0
    assert "8 simple roots, 120 positive roots" in out


def test_show_json_round_trips(capsys):
    code, out, _ = run_cli(capsys, "show", "F4", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert len(data["positive_roots"]) == 24
    assert json.loads(json.dumps(data)) == data


def test_show_unknown_type_is_usage_error(capsys):
    assert run_cli(capsys, "show", "X9")[0] == 2


def test_action_table_csv(capsys):
    code, out, _ = run_cli(capsys, "weyl", "action-table", "E8", "--removed", "8")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "simple_root;w0_inverse_image"
    assert "a8;(-1,-2,-3,-3,-3,-2,-1,-1)" in lines


def test_action_table_includes_foreign_row(capsys):
    code, out, _ = run_cli(capsys, "weyl", "action-table", "E6", "--removed", "8")
    assert code == 0
    assert "a2;(0,1,1,2,3,2,1,2)" in out


def test_action_table_latex(capsys):
    code, out, _ = run_cli(capsys, "weyl", "action-table", "G2", "--removed", "alpha",
                           "--format", "latex")
    assert code == 0
    assert out.startswith("\\begin{longtable}")
    assert out.rstrip().endswith("\\end{longtable}")


def test_decompose_json_schema(capsys):
    code, out, _ = run_cli(capsys, "decompose", "F4", "--removed", "1", "--way", "2",
                           "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["type"] == "F4" and data["removed"] == 1 and data["way"] == 2
    assert data["total_length"] == 15
    assert json.loads(json.dumps(data)) == data


def test_decompose_bad_way(capsys):
    assert run_cli(capsys, "decompose", "G2", "--removed", "1", "--way", "5")[0] == 2


def test_normtable_csv_matches_table(capsys):
    code, out, _ = run_cli(capsys, "normtable", "G2", "--removed", "beta")
    assert code == 0
    assert "(1,-2,1);(0,1);s-1/2;3/2-s" in out


def test_normtable_missing_pair(capsys):
    code, _, err = run_cli(capsys, "normtable", "E6", "--removed", "3")
    assert code == 2
    assert "no published inducing exponent" in err


def test_verify_json(capsys):
    code, out, _ = run_cli(capsys, "verify", "F4", "--removed", "1", "--ways", "1,3")
    assert code == 0
    data = json.loads(out)
    assert data["verdict"] == "HOLOMORPHIC_VERIFIED"
    assert data["gcd_terms"] == []
    assert set(data["per_way_discrepancies"]) == {"1", "3"}


def test_verify_obstructed_exit_code(capsys):
    code, out, _ = run_cli(capsys, "verify", "G2", "--removed", "alpha")
    assert code == 1
    data = json.loads(out)
    assert data["verdict"] == "OBSTRUCTED"
    assert {"term": "s+1/2", "multiplicity": 1, "positive": True} in data["gcd_terms"]


def test_verify_twist_order(capsys):
    code, out, _ = run_cli(capsys, "verify", "G2", "--removed", "alpha",
                           "--twist-order", "2")
    assert code == 0
    assert json.loads(out)["verdict"] == "HOLOMORPHIC_VERIFIED"


def test_verify_usage_errors(capsys):
    # pair without published data, and an invalid twist order
    assert run_cli(capsys, "verify", "E6", "--removed", "3")[0] == 2
    assert run_cli(capsys, "verify", "G2", "--removed", "1", "--twist-order", "1")[0] == 2


def test_help_exits_cleanly(capsys):
    assert run_cli(capsys, "--help")[0] == 0
    assert run_cli(capsys, "decompose", "--help")[0] == 0
    assert run_cli(capsys)[0] == 2


def test_reproduce_all_ok(capsys):
    code, out, _ = run_cli(capsys, "reproduce-all")
    assert code == 0
    for table_id in golden.ALL_TABLE_IDS:
        assert table_id in out
    assert "known typo" in out


def test_reproduce_all_only(capsys):
    code, out, _ = run_cli(capsys, "reproduce-all", "--only", "G2")
    assert code == 0
    assert "G2-normalization" in out and "E8-action" not in out


def test_reproduce_all_jobs_matches_serial(capsys):
    code1, out1, _ = run_cli(capsys, "reproduce-all", "--jobs", "4")
    code2, out2, _ = run_cli(capsys, "reproduce-all")
    assert (code1, out1) == (code2, out2)


def test_reproduce_all_detects_corruption(capsys, monkeypatch):
    real = golden._load_rows

    def corrupt(fname):
        rows = real(fname)
        if fname == "g2_normalization.csv":
            rows[0]["s1"] = "s-7/2"
        return rows

    monkeypatch.setattr(golden, "_load_rows", corrupt)
    code, out, _ = run_cli(capsys, "reproduce-all")
    assert code == 1
    assert "MISMATCH" in out
    assert "s-7/2" in out and "s-3/2" in out


def test_verify_paper_claims_reports_divergence(capsys):
    code, out, err = run_cli(capsys, "verify-paper-claims")
    data = json.loads(out)
    assert len(data) == 28
    mism = [r for r in data if not r["matches_published"]]
    assert [(1, r["pair"]["type"], r["pair"]["removed"]) for r in mism] == [(1, "E8", 8)]
    assert code == 1
    assert "mismatch vs published" in err


def test_verify_paper_claims_jobs_deterministic(capsys):
    code1, out1, _ = run_cli(capsys, "verify-paper-claims", "--jobs", "4")
    code2, out2, _ = run_cli(capsys, "verify-paper-claims")
    assert (code1, out1) == (code2, out2)


def test_out_dir_writes_file(capsys, tmp_path):
    code, out, _ = run_cli(capsys, "normtable", "F4", "--removed", "4",
                           "--out", str(tmp_path))
    assert code == 0
    written = tmp_path / "F4_normtable_4.csv"
    assert written.exists()
    assert "s-9/2" in written.read_text()


def test_config_out_dir(capsys, tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"out_dir": str(tmp_path / "out")}))
    code, _, _ = run_cli(capsys, "--config", str(cfg), "normtable", "G2",
                         "--removed", "1")
    assert code == 0
    assert (tmp_path / "out" / "G2_normtable_1.csv").exists()
