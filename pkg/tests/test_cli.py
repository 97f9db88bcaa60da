import argparse
import subprocess
import sys

import pytest

from mertens import cli, driver


def run(argv, capsys):
    code = cli.main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_parse_x():
    assert cli.parse_x("1000") == 1000
    assert cli.parse_x("10^17") == 10 ** 17
    assert cli.parse_x("2**34") == 2 ** 34
    assert cli.parse_x("1e10") == 10 ** 10
    assert cli.parse_x("1_000") == 1000
    for bad in ("1.5", "x", "2^", "-3", "10**17+1"):
        with pytest.raises(argparse.ArgumentTypeError):
            cli.parse_x(bad)


def test_plain(capsys):
    assert run(["10"], capsys)[:2] == (0, "M(10) = -1\n")
    assert run(["10^6", "--mode", "brute"], capsys)[:2] == (0, "M(1000000) = 212\n")


def test_csv(capsys):
    code, out, _ = run(["--x-list", "1000,10^5", "--csv", "--threads", "2"], capsys)
    lines = out.strip().splitlines()
    assert code == 0 and lines[0] == driver.RunReport.CSV_HEADER
    assert lines[1].startswith("1000,2,") and lines[2].startswith("100000,-48,")
    assert lines[2].endswith(",2")
    assert all(len(f.split(".")[1]) == 3 for f in lines[1].split(",")[4:7])


def test_threads_env(capsys, monkeypatch):
    monkeypatch.setenv("MERTENS_THREADS", "3")
    code, out, _ = run(["10^5", "--csv"], capsys)
    assert code == 0 and out.strip().splitlines()[1].endswith(",3")


def test_backend_flag(capsys):
    assert run(["10^5", "--backend", "python"], capsys)[:2] == (0, "M(100000) = -48\n")


def test_guard_exit(capsys):
    code, out, err = run(["10^23", "--c", "3"], capsys)
    assert code == 2 and out == "" and "log2 bound" in err


def test_verify_exit(capsys, monkeypatch):
    assert run(["10^5", "--mode", "verify"], capsys)[0] == 0
    monkeypatch.setattr(driver, "large_free", lambda *a, **k: 1)
    code, _, err = run(["10^5", "--mode", "verify"], capsys)
    assert code == 3 and "-48" in err


def test_verify_cap(capsys):
    code, _, err = run(["10^10", "--mode", "verify"], capsys)
    assert code == 1 and "capped" in err


def test_bench(capsys):
    code, out, _ = run(["--mode", "bench", "--x-list", "2^16,2^18,2^20"], capsys)
    lines = out.strip().splitlines()
    assert code == 0 and len(lines) == 5 and lines[-1].startswith("# slope,")
    code, out, _ = run(["2^16", "--mode", "bench"], capsys)
    assert out.strip().endswith("# slope,")


def test_missing_x(capsys):
    assert run([], capsys)[0] == 1


def test_console_entry():
    out = subprocess.run([sys.executable, "-m", "mertens.cli", "1000"], capture_output=True,
                         text=True, check=True)
    assert out.stdout == "M(1000) = 2\n"
