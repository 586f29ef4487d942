import io
import json

import pytest

from hurwitz import cli


def run(args):
    buf = io.StringIO()
    parser = cli.build_parser()
    try:
        parsed = parser.parse_args(args)
        code = parsed.func(parsed, buf)
    except cli.UsageError:
        return 1, ""
    return code, buf.getvalue()


def run_main(args, capsys):
    code = cli.main(args)
    out = capsys.readouterr().out
    return code, out


def test_splitting_example(capsys):
    code, out = run_main(["splitting", "--prime", "13"], capsys)
    assert code == 0
    report = json.loads(out)
    assert report["schema"] == 1
    assert (report["e"], report["f"], report["g"]) == (1, 1, 3)


def test_splitting_tsv(capsys):
    code, out = run_main(["splitting", "--prime", "2", "--format", "tsv"], capsys)
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "prime\te\tf\tg"
    assert lines[1] == "2\t1\t3\t1"


def test_usage_errors_exit_one(capsys):
    assert cli.main(["nosuchcommand"]) == 1
    assert cli.main([]) == 1
    assert cli.main(["splitting"]) == 1  # missing --prime
    assert cli.main(["splitting", "--prime", "9"]) == 1  # not prime
    assert cli.main(["census", "--max-genus", "3", "--type", "bad"]) == 1
    assert cli.main(["dessins", "--group", "nosuch:1", "--type", "2,3,7"]) == 1
    capsys.readouterr()


def test_cap_exceeded_exit_two(capsys):
    code = cli.main(["dessins", "--group", "psl2:27", "--cap", "100"])
    capsys.readouterr()
    assert code == 2


def test_origami_genus_six(capsys):
    code, out = run_main(["origami", "--genus", "6"], capsys)
    assert code == 0
    report = json.loads(out)
    assert report["verdict"] == "exhaustive_no"
    assert len(report["searched_groups"]) == 5


def test_origami_group(capsys):
    code, out = run_main(["origami", "--group", "dic:2"], capsys)
    assert code == 0
    report = json.loads(out)
    assert report["count"] >= 1
    assert report["classes"][0]["commutator_order"] == 2


def test_dessins_psl213(capsys):
    code, out = run_main(["dessins", "--group", "psl2:13", "--type", "2,3,7"],
                         capsys)
    assert code == 0
    report = json.loads(out)
    assert report["count"] == 3
    z_classes = {c["passport"]["z_class"] for c in report["classes"]}
    assert len(z_classes) == 3


def test_congruence_prime(capsys):
    code, out = run_main(["congruence", "--prime", "13"], capsys)
    assert code == 0
    report = json.loads(out)
    assert len(report["curves"]) == 3
    assert all(c["genus"] == 14 for c in report["curves"])


def test_congruence_group_match(capsys):
    code, out = run_main(["congruence", "--group", "psl2:8"], capsys)
    assert code == 0
    report = json.loads(out)
    assert report["match"]["ell"] == 2


def test_homology_subcommand(capsys):
    code, out = run_main(["homology", "--group", "psl2:7", "--ell", "2",
                          "--invariant-dim", "3"], capsys)
    assert code == 0
    report = json.loads(out)
    assert report["dim"] == 6
    assert report["fixed_subspace_dim"] == 0
    assert report["invariant_submodules"]["count"] == 2


def test_character_subcommand(capsys):
    code, out = run_main(["character", "--group", "psl2:7"], capsys)
    assert code == 0
    report = json.loads(out)
    assert report["faithful"] is True
    assert report["ramification_points"] == 164
    assert report["rows"][0]["chi_value"] == 6


def test_census_small_and_deterministic(capsys):
    code1, out1 = run_main(["census", "--max-genus", "4"], capsys)
    code2, out2 = run_main(["census", "--max-genus", "4", "--jobs", "2"], capsys)
    assert code1 == code2 == 0
    assert out1 == out2  # byte-identical across parallelism degrees
    report = json.loads(out1)
    assert report["schema"] == 1
    assert report["counts"] == {"2": 0, "3": 1, "4": 0}
    assert report["catalog_version"]
    assert report["catalog_conditional"] is True


def test_census_characters_flag(capsys):
    code, out = run_main(["census", "--max-genus", "3", "--characters"], capsys)
    assert code == 0
    report = json.loads(out)
    row = next(r for r in report["census"] if r["genus"] == 3)
    char = row["groups"][0]["classes"][0]["character"]
    assert char["faithful"] is True
    assert char["genus"] == 3


def test_data_pack_env(tmp_path, monkeypatch, capsys):
    from hurwitz.catalog import save_group, cyclic
    monkeypatch.setenv("HURWITZ_DATA_PACK", str(tmp_path))
    save_group(cyclic(3), tmp_path / "c3.grp")
    parser = cli.build_parser()
    args = parser.parse_args(["census", "--max-genus", "2"])
    assert args.data_pack == str(tmp_path)
