from fractions import Fraction

import pytest

from octad import cli
from octad.fields import FunctionField, PrimeField, RationalField


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_parse_field():
    assert isinstance(cli.parse_field("QQ"), RationalField)
    assert cli.parse_field("GF(7)").p == 7
    ff = cli.parse_field("GF(3)(t)")
    assert isinstance(ff, FunctionField) and ff.p == 3
    for bad in ("RR", "GF(4)", "GF(x)", "QQ(t)"):
        with pytest.raises(cli.InputError):
            cli.parse_field(bad)


def test_parse_poly_rationals():
    qq = RationalField()
    f = cli.parse_poly("T^8 - 1/2*T + 3", qq)
    assert f.degree == 8
    assert f.coeff(1) == Fraction(-1, 2)
    assert f.coeff(0) == Fraction(3)


def test_parse_poly_function_field_coeffs():
    ff = FunctionField(3)
    f = cli.parse_poly("(t^2 + 1)*T^3 + 2*t*T + t", ff)
    assert f.degree == 3
    assert f.coeff(3) == ff.from_poly((1, 0, 1))
    assert f.coeff(1) == ff.from_poly((0, 2))


def test_parse_poly_rejects_garbage():
    qq = RationalField()
    for bad in ("T^8 + %", "T^8 + (3", "T^^2", "T^8 * * 2", "t*T"):
        with pytest.raises(cli.InputError):
            cli.parse_poly(bad, qq)


def test_construct_certified(capsys):
    code, out, _ = run(capsys, "construct", "--field", "QQ", "--poly",
                       "T^8 + 42*T^4 + 168*T^2 + 1152*T + 1197")
    assert code == 0
    assert "certified: true" in out
    assert "quartic: " in out
    quartic_line = [l for l in out.splitlines()
                    if l.startswith("quartic:")][0]
    assert len(quartic_line.split(": ")[1].split(",")) == 15


def test_construct_normalizes_trace(capsys):
    code, out, _ = run(capsys, "construct", "--field", "GF(11)", "--poly",
                       "T^8 + T^7 + 1")
    lines = dict(l.split(": ", 1) for l in out.splitlines())
    assert "T^7" not in lines["normalized"]


def test_certify_failure_exit_code(capsys):
    code, out, _ = run(capsys, "certify", "--field", "QQ", "--poly",
                       "T^8 - 1")
    assert code == 2
    assert "certified: false" in out


def test_malformed_poly_exit_code(capsys):
    code, _, err = run(capsys, "construct", "--field", "QQ", "--poly",
                       "T^8 + %%")
    assert code == 1
    assert "error" in err


def test_wrong_degree_rejected(capsys):
    code, _, _ = run(capsys, "construct", "--field", "QQ", "--poly",
                     "T^3 + 1")
    assert code == 1


def test_orbits_output(capsys):
    code, out, _ = run(capsys, "orbits", "--field", "GF(11)", "--poly",
                       "T^8 + 3*T^2 + 5*T + 2")
    assert code == 0
    assert "match: true" in out
    assert "two-set-orbits" in out


def test_bitangents_line_listing(capsys):
    code, out, _ = run(capsys, "bitangents", "--field", "GF(5)", "--poly",
                       "T^8 + 4*T^2 + T + 3")
    assert code == 0
    listing = [l for l in out.splitlines() if " : (" in l]
    assert len(listing) == 28
    assert all("deg=" in l for l in listing)


def test_bad_primes_skipped(capsys):
    code, out, err = run(capsys, "orbits", "--field", "QQ", "--poly",
                         "T^8 + 42*T^4 + 168*T^2 + 1152*T + 1197",
                         "--primes", "5", "7")
    assert code == 0
    assert "skipping bad prime 7" in err
    assert "instance: p=5" in out


def test_twist_square_classes(capsys):
    code, out, _ = run(capsys, "twist", "--field", "GF(5)", "--poly",
                       "T^8 + T + 3", "--lambda", "1", "--lambda", "2")
    assert code == 0
    assert "lambda-is-square: true" in out
    assert "lambda-is-square: false" in out
    assert "twist-invariant: true" in out


def test_group_facts_all_pass(capsys):
    code, out, _ = run(capsys, "group-facts")
    assert code == 0
    assert "FAIL" not in out
    assert "order of Sp6(F2) is 1451520: PASS" in out


def test_canonical_output_is_byte_stable(capsys):
    args = ("construct", "--field", "GF(13)", "--poly",
            "T^8 + 5*T^3 + 2", "--canonical")
    _, first, _ = run(capsys, *args)
    _, second, _ = run(capsys, *args)
    assert first == second


def test_fixture_checks_pass():
    results = cli.run_fixture(cli.FIXTURES[0], prime_count=2)
    assert results and all(ok for _, ok in results)


def test_tampered_fixture_reported():
    bad = dict(cli.FIXTURES[0])
    printed = list(bad["printed"])
    printed[2] = "17"  # mutate one printed coefficient
    bad["printed"] = tuple(printed)
    results = cli.run_fixture(bad, prime_count=3)
    assert any(not ok for _, ok in results)
    # the certificate itself is untouched
    assert results[0][1]
