import subprocess
import sys
from pathlib import Path

import pytest

from swapornot.cli import cli_main

KEY = "000102030405060708090a0b0c0d0e0f101112131415161718191a1b1c1d1e1f"
VECTOR_FILE = Path(__file__).parent / "data" / "golden_vectors.txt"


def run(capsys, *argv):
    code = cli_main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_bounds_value(capsys):
    code, out, _ = run(
        capsys, "bounds", "--N", "1073741824", "--rounds", "340", "--q", "100000000",
        "--model", "cca",
    )
    assert code == 0
    assert float(out) < 1e-10


def test_bounds_six_significant_digits(capsys):
    _, out, _ = run(capsys, "bounds", "--N", "1073741824", "--rounds", "340",
                    "--q", "100000000", "--model", "cca")
    assert out.strip() == "2.23952e-11"


def test_bounds_deterministic_output(capsys):
    args = ("bounds", "--N", "1024", "--rounds", "60", "--q", "512", "--model", "ncpa")
    _, first, _ = run(capsys, *args)
    _, second, _ = run(capsys, *args)
    assert first == second


def test_bounds_csv(capsys):
    code, out, _ = run(
        capsys, "bounds", "--N", "1024", "--rounds", "60,80", "--q", "256,512",
        "--model", "cca", "--csv",
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "N,rounds,q,model,advantage"
    assert len(lines) == 5
    assert lines[1].startswith("1024,60,256,cca,")


def test_bounds_list_requires_csv(capsys):
    code, _, err = run(capsys, "bounds", "--N", "1024", "--rounds", "60,80", "--q", "1")
    assert code == 1
    assert "--csv" in err


def test_minrounds(capsys):
    code, out, _ = run(
        capsys, "minrounds", "--N", "9007199254740992", "--q", "1000000000000000",
        "--target-adv", "1e-10", "--model", "cca",
    )
    assert code == 0
    rounds = int(out)
    assert rounds % 2 == 0 and rounds <= 500


def test_minrounds_cap_exceeded(capsys):
    code, _, err = run(
        capsys, "minrounds", "--N", "1000000000", "--q", "999999999",
        "--target-adv", "1e-10", "--model", "cca",
    )
    assert code == 2
    assert "65536" in err


def test_encrypt_decrypt_roundtrip(capsys):
    base = ("--key", KEY, "--radix", "10", "--length", "9", "--tweak", "beef",
            "--rounds", "100")
    code, out, _ = run(capsys, "encrypt", *base, "123456789")
    assert code == 0
    ciphertext = out.strip()
    assert len(ciphertext) == 9 and ciphertext.isdigit()
    code, out, _ = run(capsys, "decrypt", *base, ciphertext)
    assert code == 0
    assert out.strip() == "123456789"


def test_encrypt_auto_rounds_with_budget(capsys):
    code, out, err = run(
        capsys, "encrypt", "--key", KEY, "--radix", "10", "--length", "9",
        "--queries", "100000000", "123456789",
    )
    assert code == 0
    assert "auto rounds:" in err
    rounds = int(err.split("auto rounds:")[1].split()[0])
    assert rounds % 2 == 0 and rounds <= 340
    ciphertext = out.strip()
    code, out, _ = run(
        capsys, "decrypt", "--key", KEY, "--radix", "10", "--length", "9",
        "--queries", "100000000", ciphertext,
    )
    assert code == 0 and out.strip() == "123456789"


def test_encrypt_auto_rounds_default_budget_fails(capsys):
    code, _, err = run(
        capsys, "encrypt", "--key", KEY, "--radix", "10", "--length", "9", "123456789",
    )
    assert code == 2
    assert "advantage" in err


def test_encrypt_xor_flag(capsys):
    base = ("--key", KEY, "--radix", "16", "--length", "4", "--rounds", "10", "--xor")
    code, out, _ = run(capsys, "encrypt", *base, "00ff")
    assert code == 0
    code, out2, _ = run(capsys, "decrypt", *base, out.strip())
    assert code == 0 and out2.strip() == "00ff"


def test_mixlab_csv(capsys):
    code, out, _ = run(capsys, "mixlab", "--max-n", "5", "--max-q", "2", "--max-r", "4", "--csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "law,N,q,r,tvd,bound,pass"
    # 3 ModAdd sizes + 1 XOR size, q in 1..2, r in 1..4
    assert len(lines) == 1 + 4 * 2 * 4
    assert all(line.endswith(",pass") for line in lines[1:])


def test_mixlab_plain_output(capsys):
    code, out, _ = run(capsys, "mixlab", "--max-n", "4", "--max-q", "1", "--max-r", "2")
    assert code == 0
    assert "0 violations" in out


def test_vectors_matches_frozen_file(capsys):
    code, out, _ = run(capsys, "vectors")
    assert code == 0
    assert out == VECTOR_FILE.read_text()


def test_shuffle_demo(capsys):
    code, out, _ = run(capsys, "shuffle", "--n", "8", "--rounds", "3", "--seed", "42")
    assert code == 0
    assert sorted(int(v) for v in out.split()) == list(range(8))
    _, again, _ = run(capsys, "shuffle", "--n", "8", "--rounds", "3", "--seed", "42")
    assert again == out
    code, out, _ = run(capsys, "shuffle", "--n", "8", "--rounds", "3", "--xor")
    assert code == 0
    code, _, _ = run(capsys, "shuffle", "--n", "6", "--rounds", "3", "--xor")
    assert code == 2  # XOR needs a power-of-two deck


def test_usage_errors_exit_1(capsys):
    assert run(capsys, "bogus")[0] == 1
    assert run(capsys, "bounds", "--N", "10")[0] == 1          # missing flags
    assert run(capsys, "bounds", "--N", "x", "--rounds", "2", "--q", "1")[0] == 1
    assert run(capsys, "encrypt", "--key", KEY, "--radix", "10", "--length", "9",
               "--rounds", "ten", "1")[0] == 1


def test_parameter_errors_exit_2(capsys):
    assert run(capsys, "bounds", "--N", "100", "--rounds", "7", "--q", "5")[0] == 2
    assert run(capsys, "bounds", "--N", "100", "--rounds", "8", "--q", "200")[0] == 2
    assert run(capsys, "encrypt", "--key", "zz", "--radix", "10", "--length", "9",
               "--rounds", "4", "123456789")[0] == 2
    assert run(capsys, "encrypt", "--key", KEY, "--radix", "10", "--length", "9",
               "--rounds", "4", "--tweak", "xyz", "123456789")[0] == 2
    assert run(capsys, "encrypt", "--key", KEY, "--radix", "10", "--length", "9",
               "--rounds", "4", "12345678")[0] == 2


def test_help_exits_0(capsys):
    assert run(capsys, "--help")[0] == 0


def test_module_invocation():
    result = subprocess.run(
        [sys.executable, "-m", "swapornot", "bounds", "--N", "1073741824",
         "--rounds", "340", "--q", "100000000", "--model", "cca"],
        capture_output=True, text=True,
    )
    assert result.returncode == 0
    assert float(result.stdout) < 1e-10
