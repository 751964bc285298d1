import json
import math

import pytest

from primeap import cli, oracle
from primeap.ntheory import primes_upto


def run_cli(*argv, capsys=None):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_profile_smooth_modulus(capsys):
    code, out, _ = run_cli("profile", "--q", "30030", capsys=capsys)
    assert code == 0
    report = json.loads(out)
    assert abs(report["tau"] - 0.50568) <= 5e-4
    assert report["phi"] == 5760
    assert report["warnings"] == []


def test_profile_q2023_phi(capsys):
    code, out, _ = run_cli("profile", "--q", "2023", capsys=capsys)
    assert json.loads(out)["phi"] == 1632 and code == 0


def test_profile_tiny_modulus_warns_but_succeeds(capsys):
    code, out, _ = run_cli("profile", "--q", "2", capsys=capsys)
    assert code == 0
    report = json.loads(out)
    assert report["sigma_q_sq"] < 0
    assert report["warnings"]


def test_profile_round_trips(capsys):
    _, out, _ = run_cli("profile", "--q", "5749", capsys=capsys)
    report = json.loads(out)
    assert json.loads(json.dumps(report)) == report


def test_validation_exit_code(capsys):
    code, _, err = run_cli("profile", "--q", "1", capsys=capsys)
    assert code == cli.EXIT_VALIDATION
    assert err.startswith("error: validation:")


def test_unknown_command_exit_code(capsys):
    code, _, err = run_cli("nonsense", capsys=capsys)
    assert code == cli.EXIT_VALIDATION
    assert err.startswith("error: validation:")


@pytest.fixture()
def cache_dir(tmp_path):
    return str(tmp_path / "cache")


def test_figure7_contract(tmp_path, cache_dir, capsys):
    out_file = tmp_path / "fig7.csv"
    code, _, _ = run_cli("figure7", "--q", "101", "--cache-dir", cache_dir,
                         "--out", str(out_file), capsys=capsys)
    assert code == 0
    text = out_file.read_text()
    lines = text.splitlines()
    header = [l for l in lines if not l.startswith("#")][0]
    assert header == ("t_bin_left,empirical_density,empirical_cdf,"
                      "exponential_pdf,exponential_cdf")
    rows = [l for l in lines if not l.startswith("#")][1:]
    assert len(rows) == math.ceil(5.0 / 0.1)
    assert "# samples: 100" in text  # phi(101)


def test_figure7_rerun_byte_identical(tmp_path, cache_dir, capsys):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    run_cli("figure7", "--q", "101", "--cache-dir", cache_dir, "--out",
            str(a), capsys=capsys)
    run_cli("figure7", "--q", "101", "--cache-dir", cache_dir, "--out",
            str(b), "--threads", "8", capsys=capsys)
    assert a.read_bytes() == b.read_bytes()


def test_figure_validation_precedes_work(cache_dir, capsys):
    # a bad bin width must be rejected before any scanning happens
    code, _, err = run_cli("figure7", "--q", "101", "--bin-width", "-0.1",
                           "--cache-dir", cache_dir, capsys=capsys)
    assert code == cli.EXIT_VALIDATION
    assert "bin width" in err


def test_figure7_incomplete_table_is_hard_error(cache_dir, capsys):
    code, _, err = run_cli("figure7", "--q", "101", "--ceiling", "150",
                           "--cache-dir", cache_dir, capsys=capsys)
    assert code == cli.EXIT_COMPUTATION
    assert err.startswith("error: computation:")


def test_figure7_prime_modulus_sample_count(tmp_path, cache_dir, capsys):
    out_file = tmp_path / "f7-5749.csv"
    code, _, _ = run_cli("figure7", "--q", "5749", "--cache-dir", cache_dir,
                         "--out", str(out_file), capsys=capsys)
    assert code == 0
    assert "# samples: 5748" in out_file.read_text()


def test_figure8_contract(tmp_path, cache_dir, capsys):
    out_file = tmp_path / "fig8.csv"
    code, _, _ = run_cli("figure8", "--q", "210", "--cache-dir", cache_dir,
                         "--out", str(out_file), capsys=capsys)
    assert code == 0
    text = out_file.read_text()
    assert "modified_cdf" in text.splitlines()[-51]
    assert "# breakpoints: " in text
    assert "# sup_distance_exponential: " in text
    assert "# sup_distance_modified: " in text


def test_figure8_missing_column_never_happens_for_figure7(tmp_path, cache_dir,
                                                          capsys):
    # figure7 must NOT contain the modified column (contract separation)
    out_file = tmp_path / "f7.csv"
    run_cli("figure7", "--q", "101", "--cache-dir", cache_dir, "--out",
            str(out_file), capsys=capsys)
    assert "modified_cdf" not in out_file.read_text()


def test_figure8_columns_match_library_recomputation(tmp_path, cache_dir,
                                                     capsys):
    import numpy as np
    from primeap import apstats, distributions as dist
    from primeap.singular import modulus_profile

    out_file = tmp_path / "f8.csv"
    run_cli("figure8", "--q", "210", "--cache-dir", cache_dir, "--out",
            str(out_file), capsys=capsys)
    lines = [l for l in out_file.read_text().splitlines()
             if not l.startswith("#")]
    cols = lines[0].split(",")
    rows = np.array([[float(c) for c in l.split(",")] for l in lines[1:]])
    data = {name: rows[:, i] for i, name in enumerate(cols)}

    prof = modulus_profile(210)
    table = apstats.least_primes(210)
    values = dist.least_prime_values(table, prof)
    ecdf = dist.EmpiricalCdf(values)
    pred = dist.ModifiedPrediction(prof)
    t = data["t_bin_left"]
    assert np.array_equal(data["empirical_cdf"], ecdf(t))
    assert np.array_equal(data["modified_cdf"], pred(t))
    assert np.allclose(data["exponential_cdf"], -np.expm1(-t), atol=0)


def test_psi_moments_base_cases(capsys):
    code, out, _ = run_cli("psi-moments", "--q", "101", "--N", "10000",
                           "--K-max", "3", capsys=capsys)
    assert code == 0
    report = json.loads(out)
    k0 = report["moments"][0]
    assert k0["empirical"] == 1.0
    k1 = report["moments"][1]
    assert k1["predicted_main_term"] == 0.0
    assert abs(k1["empirical"] - report["k1_collapse"]) <= 1e-9 * max(
        1.0, abs(report["k1_collapse"]))


def test_psi_moments_cap(capsys):
    code, _, err = run_cli("psi-moments", "--q", "101", "--N", "10000",
                           "--K-max", "9", capsys=capsys)
    assert code == cli.EXIT_VALIDATION
    assert "capped" in err


def test_pi_moments_mean_identity_and_warning(capsys):
    q, N = 101, 100000
    code, out, err = run_cli("pi-moments", "--q", str(q), "--N", str(N),
                             capsys=capsys)
    assert code == 0  # regime warning is non-fatal
    assert "warning:" in err
    report = json.loads(out)
    adjustment = sum(1 for p in primes_upto(N) if q % int(p) == 0)
    expected = (len(primes_upto(N)) - adjustment) / 100
    assert report["moments"][0]["empirical"] == pytest.approx(expected,
                                                              rel=1e-12)


def test_pi_moments_cap(capsys):
    code, _, _ = run_cli("pi-moments", "--q", "101", "--N", "10000",
                         "--k-max", "9", capsys=capsys)
    assert code == cli.EXIT_VALIDATION


def test_poisson_command_solves_for_N(capsys):
    code, out, _ = run_cli("poisson", "--q", "9973", "--lambda", "1.0",
                           capsys=capsys)
    assert code == 0
    report = json.loads(out)
    N = report["N"]
    lam = report["lambda"]
    assert abs(lam - N / (9972 * math.log(N))) < 1e-12
    assert 0.9 <= lam <= 1.1
    assert 0 <= report["poisson"]["tv_distance"] <= 1


def test_verify_fresh_checkout_passes(capsys):
    code, out, _ = run_cli("verify", capsys=capsys)
    assert code == 0
    report = json.loads(out)
    assert report["ok"] is True
    assert report["sections"]["vk_identity_grid"] == 768
    assert report["sections"]["ramanujan_grid"] == 201 * 200


def test_verify_corrupted_fixture_exits_3(tmp_path, capsys):
    bad = oracle.FixtureRecord("partition_count", (4, 2), 99, 0.0, "corrupt")
    path = tmp_path / "fixtures.txt"
    oracle.write_fixtures([bad], path)
    code, out, err = run_cli("verify", "--fixtures", str(path), capsys=capsys)
    assert code == cli.EXIT_FIXTURE
    assert "mismatch: partition_count" in err
    assert json.loads(out)["ok"] is False


def test_poisson_rejects_bad_lambda(capsys):
    code, _, _ = run_cli("poisson", "--q", "101", "--lambda", "-1",
                         capsys=capsys)
    assert code == cli.EXIT_VALIDATION


def test_stdout_payloads_are_deterministic(capsys):
    _, out1, _ = run_cli("profile", "--q", "30030", capsys=capsys)
    _, out2, _ = run_cli("profile", "--q", "30030", "--threads", "5",
                         capsys=capsys)
    assert out1 == out2
