import json

from skewinv.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_molien_gnk73(capsys):
    code, out, _ = run_cli(
        capsys, "molien", "--algebra", "qminus1", "--group", "gnk", "7", "3", "--N", "36"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["schema"] == 1
    series = [int(c) for c in payload["series"]]
    assert series[0] == 1
    assert series[9] == 1 and series[12] == 1 and series[15] == 1
    assert series[30] == 2  # 30 = 15+15 = 9+21 and t^30 subtracted once


def test_classify_non_small(capsys):
    code, out, _ = run_cli(
        capsys, "classify", "--algebra", "qminus1", "--group", "gnk", "3", "2"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["report"]["is_small"] is False


def test_classify_rejects_commutative(capsys):
    code, _, err = run_cli(
        capsys, "classify", "--algebra", "commutative", "--group", "cyclic", "3", "1"
    )
    assert code == 1
    assert "not commutative" in err or "q = 1" in err


def test_classify_warns_on_reducible_pair(capsys):
    code, out, err = run_cli(
        capsys, "classify", "--algebra", "qminus1", "--group", "gnk", "2", "4"
    )
    assert code == 0
    assert "reduces" in err
    assert json.loads(out)["report"]["order"] == 8


def test_hj_expand(capsys):
    code, out, _ = run_cli(capsys, "hj", "expand", "17", "14")
    assert code == 0
    assert json.loads(out)["data"]["entries"] == [2, 2, 2, 2, 3, 2]


def test_hj_bare_form_defaults_to_expand(capsys):
    code, out, _ = run_cli(capsys, "hj", "17", "14")
    assert code == 0
    assert json.loads(out)["data"]["entries"] == [2, 2, 2, 2, 3, 2]


def test_auslander_default_N(capsys):
    code, out, _ = run_cli(
        capsys, "auslander", "--algebra", "qminus1", "--group", "gnk", "3", "1"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["N"] == 16  # 4nk + 4
    assert payload["truncated"] is False
    assert payload["witness"] == 4


def test_verify_pres_default_N(capsys):
    code, out, _ = run_cli(capsys, "verify-pres", "--family", "jordan", "--n", "2")
    assert code == 0
    payload = json.loads(out)
    assert payload["N"] == 12  # 2*max relation degree + 2*max generator degree
    assert payload["ok"] is True


def test_hj_nc(capsys):
    code, out, _ = run_cli(capsys, "hj", "nc", "7", "3")
    assert code == 0
    data = json.loads(out)["data"]
    assert data["r"] == [4, 1, 0]
    assert data["s"] == [1, 1, 3]
    assert data["t"] == [5, 3, 7]


def test_hj_invalid_input_exit_code(capsys):
    code, _, err = run_cli(capsys, "hj", "nc", "4", "2")
    assert code == 1
    assert "error" in err


def test_generators_with_verify(capsys):
    code, out, _ = run_cli(
        capsys,
        "generators", "--algebra", "qminus1", "--group", "gnk", "3", "1", "--verify", "16",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["set"]["degrees"] == [5, 3, 4]
    assert payload["verification"]["ok"] is True


def test_trace_element(capsys):
    code, out, _ = run_cli(
        capsys,
        "trace", "--algebra", "qminus1", "--group", "gnk", "3", "1",
        "--element", "h", "--N", "8",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["series"] == ["1", "0", "-1", "0", "1", "0", "-1", "0", "1"]
    assert "closed_form" in payload


def test_present_verify_roundtrip(capsys):
    code, out, _ = run_cli(capsys, "present", "--family", "jordan", "--n", "2")
    assert code == 0
    pres_payload = out
    import io
    import sys

    code2 = None
    stdin_backup = sys.stdin
    try:
        sys.stdin = io.StringIO(pres_payload)
        code2, out2, _ = run_cli(
            capsys,
            "verify-pres", "--stdin", "--algebra", "jordan",
            "--group", "cyclic", "2", "1", "--N", "12",
        )
    finally:
        sys.stdin = stdin_backup
    assert code2 == 0
    assert json.loads(out2)["ok"] is True


def test_verify_pres_family_direct(capsys):
    code, out, _ = run_cli(
        capsys,
        "verify-pres", "--family", "quantum", "--n", "5", "--a", "2",
        "--q", "root:5", "--N", "24",
    )
    assert code == 0
    assert json.loads(out)["ok"] is True


def test_auslander_witness(capsys):
    code, out, err = run_cli(
        capsys,
        "auslander", "--algebra", "qminus1", "--group", "gnk", "3", "1", "--N", "20",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["witness"] == 4
    assert "wall time" in err  # diagnostics on stderr, payload deterministic


def test_auslander_not_found(capsys):
    code, out, _ = run_cli(
        capsys,
        "auslander", "--algebra", "qminus1", "--group", "gnk", "3", "2", "--N", "16",
    )
    assert code == 0
    assert json.loads(out)["witness"] == "not_found"


def test_gnk_basis_command(capsys):
    code, out, _ = run_cli(capsys, "gnk-basis", "7", "3", "--d", "9")
    assert code == 0
    payload = json.loads(out)
    assert payload["dimension"] == 1
    assert payload["basis"] == ["-1 * u^1 * v^8 + 1 * u^8 * v^1"]


def test_theta_command(capsys):
    code, out, _ = run_cli(capsys, "theta", "2", "1", "--N", "16")
    assert code == 0
    payload = json.loads(out)
    assert payload["target"] == {"kind": "cyclic", "order": 4, "weight": 3}


def test_deterministic_output(capsys):
    args = ("molien", "--algebra", "qminus1", "--group", "gnk", "3", "1", "--N", "12")
    _, out1, _ = run_cli(capsys, *args)
    _, out2, _ = run_cli(capsys, *args)
    assert out1 == out2


def test_quantum_algebra_flag(capsys):
    code, out, _ = run_cli(
        capsys,
        "molien", "--algebra", "quantum", "--q", "root:5",
        "--group", "cyclic", "5", "2", "--N", "10",
    )
    assert code == 0
    series = [int(c) for c in json.loads(out)["series"]]
    # the trace is q-independent for diagonal groups, so count monomials
    # u^i v^j with i + 2j = 0 mod 5 directly
    expected = [
        sum(1 for i in range(d + 1) if (i + 2 * (d - i)) % 5 == 0) for d in range(11)
    ]
    assert series == expected


def test_text_format(capsys):
    code, out, _ = run_cli(
        capsys,
        "molien", "--algebra", "qminus1", "--group", "gnk", "3", "1",
        "--N", "6", "--format", "text",
    )
    assert code == 0
    assert "series" in out
