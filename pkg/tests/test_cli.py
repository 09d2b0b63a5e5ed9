from monoidkit.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_mul_partial_maps(capsys):
    code, out, _ = run(capsys, "mul", "--kind", "PT", "[2,2,_]", "[_,3,1]")
    assert code == 0 and out == "[3,3,_]\n"


def test_mul_nf(capsys):
    code, out, _ = run(capsys, "mul", "--kind", "NF", "{0};+0", "{};+1")
    assert code == 0 and out == "{0};+1\n"


def test_mul_words(capsys):
    code, out, _ = run(capsys, "mul", "--kind", "word", "ge", "ge")
    assert code == 0 and out == "{-2,-1};+2\n"


def test_green_true(capsys):
    code, out, _ = run(capsys, "green", "--kind", "PT", "--side", "R", "[1,_]", "[1,2]")
    assert code == 0 and out == "true\n"


def test_green_false_exit_code(capsys):
    code, out, _ = run(capsys, "green", "--kind", "T", "--side", "L", "[1,2]", "[1,1]")
    assert code == 1 and out == "false\n"


def test_green_oracle_witness(capsys):
    code, out, _ = run(capsys, "green", "--kind", "T", "--oracle", "[2,2]", "[1,1]")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "true"
    assert lines[1].startswith("witness\t")


def test_meet_empty(capsys):
    code, out, _ = run(capsys, "meet", "--kind", "P", "{1 2}{1'}{2'}", "{1}{2 2'}{1'}")
    assert code == 0 and out == "EMPTY\n"


def test_meet_with_verification(capsys):
    code, out, _ = run(capsys, "meet", "--kind", "PT", "--verify", "[1,2]", "[1,_]")
    assert code == 0
    assert out.splitlines() == ["[1,_]", "verified"]


def test_meet_left_side(capsys):
    code, out, _ = run(capsys, "meet", "--kind", "T", "--side", "L", "[1,1]", "[2,2]")
    assert code == 0 and out == "EMPTY\n"


def test_cong_close_classes_and_witness(capsys):
    code, out, _ = run(
        capsys, "cong-close", "--kind", "T", "--n", "2",
        "--pair", "[1,2]", "[1,1]", "--witness", "[2,1]", "[2,2]",
    )
    assert code == 0
    lines = out.splitlines()
    assert "[1,2]\t[1,1]" in lines
    assert "[2,1]\t[2,2]" in lines
    assert "witness\t1 steps" in lines
    assert "[1,2]\t[1,1]\t[2,1]" in lines


def test_cong_close_unrelated_witness(capsys):
    code, out, _ = run(
        capsys, "cong-close", "--kind", "T", "--n", "2",
        "--pair", "[1,2]", "[1,1]", "--witness", "[1,2]", "[2,1]",
    )
    assert code == 1
    assert "NOT-RELATED" in out


def test_annihilator_command(capsys):
    code, out, _ = run(capsys, "annihilator", "--kind", "T", "--n", "2", "--elem", "[1,1]")
    assert code == 0
    assert set(out.splitlines()) == {"[1,2]\t[1,1]", "[2,1]\t[2,2]"}


def test_pmonoid_relations(capsys):
    code, out, _ = run(capsys, "pmonoid", "relations", "--max-k", "10")
    assert code == 0 and out == "true\n"


def test_pmonoid_nc(capsys):
    code, out, _ = run(capsys, "pmonoid", "nc", "--max-n", "10")
    assert code == 0 and out == "true\n"


def test_pmonoid_ann_yes(capsys):
    code, out, _ = run(capsys, "pmonoid", "ann", "ge", "heg")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "yes n=1 side=h"
    assert lines[1] == "witness\t3 steps"


def test_pmonoid_ann_no(capsys):
    code, out, _ = run(capsys, "pmonoid", "ann", "g", "")
    assert code == 1 and out == "no\n"


def test_pmonoid_ann_nf_literals(capsys):
    code, out, _ = run(capsys, "pmonoid", "ann", "--nf", "{};+0", "{0};+0")
    assert code == 0
    assert out.splitlines()[0] == "yes n=0"


def test_pmonoid_chain_report(capsys):
    code, out, _ = run(
        capsys, "pmonoid", "chain", "--n", "2", "--max-excluded", "3", "--max-magnitude", "6",
    )
    assert code == 0
    assert out.startswith("n=2 y=1 reached=false explored=")
    assert "bounds=|E|<=3,mag<=6,len<=8" in out


def test_render_partition(capsys):
    code, out, _ = run(capsys, "render", "{1 2 1'}{2'}")
    assert code == 0
    assert out.startswith("graph partition {")
    assert "u1 -- u2;" in out


def test_parse_error_exit_code(capsys):
    code, _, err = run(capsys, "mul", "--kind", "PT", "[1,_")
    assert code == 2
    assert "position" in err


def test_semantic_error_exit_code(capsys):
    code, _, err = run(capsys, "render", "{1 2'}{2}")
    assert code == 2
    assert "missing" in err


def test_size_mismatch_exit_code(capsys):
    code, _, err = run(capsys, "mul", "--kind", "PT", "[1,2]", "[1,2,3]")
    assert code == 2


def test_usage_error_exit_code(capsys):
    assert main(["green", "--kind", "Z", "[1]", "[1]"]) == 2
    assert main(["no-such-command"]) == 2


def test_verify_single_suite(capsys):
    code, out, _ = run(capsys, "verify", "embeddings")
    assert code == 0
    assert out.startswith("PASS embeddings:")


def test_verify_seeded_suite(capsys):
    code, out, _ = run(capsys, "verify", "star", "--seed", "7")
    assert code == 0
    assert out.startswith("PASS star:")


def test_verify_all_aggregates(capsys):
    code, out, _ = run(capsys, "verify", "all")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 12
    assert all(line.startswith("PASS") for line in lines)
