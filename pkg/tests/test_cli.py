import json

import pytest

from mfq.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_order(capsys):
    assert run(capsys, "order", "psp(6,3)") == (0, "4585351680\n", "")


def test_order_bad_input(capsys):
    code, _, err = run(capsys, "order", "psl(2,6)")
    assert code == 2 and "prime power" in err


def test_unknown_subcommand(capsys):
    assert run(capsys, "nope")[0] == 2


def test_spectrum_exact_and_sampled(capsys):
    code, out, _ = run(capsys, "spectrum", "psl(2,7)")
    assert code == 0 and out.startswith("psl(2,7): 1,2,3,4,7 (exact")
    code, out, _ = run(capsys, "spectrum", "psu(3,3)", "--sample", "100", "--seed", "4")
    assert code == 0 and "sampled lower bound" in out


def test_spectrum_falls_back_to_formula_and_catalog(capsys):
    code, out, _ = run(capsys, "spectrum", "psp(6,3)")
    assert code == 0 and "structural formula" in out
    code, out, _ = run(capsys, "spectrum", "mcl")
    assert code == 0 and "atlas-data" in out


@pytest.mark.parametrize("sub,expected", [("z(2)", "(1;2^4)"), ("z(3)", "(1;3,3)"), ("z(7)", "(0;7,7,7)")])
def test_signature_preimage(capsys, sub, expected):
    code, out, _ = run(capsys, "signature", "preimage", "--sig", "(0;2,3,7)", "--group", "psl(2,7)",
                       "--subgroup", sub)
    assert code == 0 and f"preimage {expected}" in out


def test_signature_preimage_no_such_subgroup(capsys):
    code, _, err = run(capsys, "signature", "preimage", "--sig", "(0;2,3,7)", "--group", "psl(2,7)",
                       "--subgroup", "z(5)")
    assert code == 2 and "order 5" in err


def test_epi_find(capsys):
    code, out, _ = run(capsys, "epi", "find", "--sig", "(0;2,4,5)", "--group", "s(5)")
    assert code == 0 and "kernel genus 4" in out
    code, out, _ = run(capsys, "epi", "find", "--sig", "(0;2,3,7)", "--group", "a(5)")
    assert code == 1


def test_ledger_json(capsys):
    code, out, _ = run(capsys, "ledger", "--genus", "4", "--format", "json")
    assert code == 0 and all(e["ok"] for e in json.loads(out))


def test_replay_bad_catalog(capsys, tmp_path):
    p = tmp_path / "c.json"
    p.write_text("[1]")
    code, _, err = run(capsys, "replay", "g4", "--catalog", str(p))
    assert code == 2 and "catalog error" in err


def test_replay_frontier_exit_code(capsys):
    code, out, _ = run(capsys, "replay", "frontier-g3")
    assert code == 1 and "discrepancies:" in out and "U3(17)" in out


def test_congruence(capsys):
    code, out, _ = run(capsys, "congruence", "kernel", "--n", "2", "--p", "3", "--r", "2")
    assert code == 0 and "|K|: 27" in out
    assert run(capsys, "congruence", "crt", "--n", "2")[0] == 2
