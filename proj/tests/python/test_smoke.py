"""Smoke tests for the vanderput extension module."""

import pytest

import vanderput as vp


def test_padic_basics():
    x = vp.PadicInt.from_integer(12, 3, 3)
    assert x.digits == [0, 1, 1]
    assert x.valuation() == 1
    assert int(x) == 12
    assert vp.PadicInt.zero(5, 4).valuation() is None

    y = vp.PadicInt.from_integer(15, 3, 3)
    assert int(x + y) == 0  # 27 = 0 mod 27
    assert int(x * y) == (12 * 15) % 27

    with pytest.raises(vp.Error):
        vp.PadicInt.from_integer(1, 4, 2)
    with pytest.raises(vp.Error):
        x + vp.PadicInt.from_integer(0, 3, 2)


def test_series_roundtrip_and_normalization():
    identity = vp.FunctionTable.from_function(2, 3, lambda x: x)
    series = vp.coefficients(identity)
    assert series.coeffs == [0, 1, 2, 2, 4, 4, 4, 4]
    assert vp.to_table(series) == identity
    assert [vp.evaluate(series, x) for x in range(8)] == list(range(8))

    norm = vp.normalize(series)
    assert norm.ok
    assert norm.coeffs.b == [0, 1, 1, 1, 1, 1, 1, 1]

    bad = vp.normalize(vp.VdpSeries(2, 2, [0, 1, 1, 2]))
    assert not bad.ok
    assert bad.witness_m == 2


def test_checks_and_witnesses():
    shift = vp.FunctionTable.from_function(2, 4, lambda x: x + 2)
    assert vp.check_measure_preserving(shift).ok
    assert vp.check_mp_p2(shift).ok
    assert vp.oracle_measure_preserving(shift).ok

    double = vp.FunctionTable.from_function(2, 3, lambda x: 2 * x)
    verdict = vp.check_measure_preserving(double)
    assert not verdict.ok
    assert verdict.condition == "MP_COND1"
    assert (verdict.witness.i, verdict.witness.j) == (0, 1)

    square = vp.FunctionTable.from_function(2, 3, lambda x: x * x)
    oracle = vp.oracle_measure_preserving(square)
    assert not oracle.ok
    assert oracle.condition == "BIJ_MOD_PK"
    assert (oracle.witness.k, oracle.witness.x, oracle.witness.y) == (2, 0, 2)


def test_generators_agree_with_oracle():
    for seed in range(20):
        family = vp.random_substitution_family(3, 3, seed)
        h = vp.random_compatible(3, 3, seed + 1000)
        f = vp.build_additive_mp(family, h)
        assert vp.check_measure_preserving(f).ok
        assert vp.oracle_measure_preserving(f).ok

        parts = vp.decompose_additive(f)
        assert isinstance(parts, vp.AdditiveParts)
        assert vp.build_additive_mp(parts.family, parts.free_part) == f

    not_mp = vp.decompose_additive(vp.FunctionTable.from_function(2, 3, lambda x: 2 * x))
    assert isinstance(not_mp, vp.Verdict)
    assert not not_mp.ok


def test_power_and_affine_families():
    f = vp.build_power_substitution_mp(5, 3, 2)
    assert vp.check_measure_preserving(f).ok
    with pytest.raises(vp.Error):
        vp.build_power_substitution_mp(5, 2, 2)

    g = vp.pseudo_constant_table(3, 4)
    assert vp.check_compatible(g).ok
    affine = vp.build_affine_mp(
        vp.PadicInt.from_integer(1, 3, 4), vp.PadicInt.from_integer(4, 3, 4), g
    )
    assert vp.oracle_measure_preserving(affine).ok


def test_branch_map_and_chi():
    identity = vp.FunctionTable.from_function(3, 2, lambda x: x)
    norm = vp.normalize(vp.coefficients(identity))
    bmap = vp.branch_digit_map(norm.coeffs, 0, 1)
    assert bmap.image == [0, 1, 2]
    assert bmap.is_permutation()
    assert bmap(0) == 0

    assert vp.chi(3, 28, 5, 3) == 1
    assert vp.chi(3, 1, 2, 3) == 0
    assert vp.coeff_scale(8, 2) == 3
    assert vp.ball_level(0, 7) == 1


def test_file_format():
    f = vp.random_compatible(3, 2, 9)
    text = vp.serialize_values(f)
    parsed = vp.parse_function_file(text)
    assert isinstance(parsed, vp.FunctionTable)
    assert parsed == f
    assert vp.serialize_values(parsed) == text

    series = vp.parse_function_file("p 2\nK 2\nrepr coeffs\n1\n0\n1\n1\n")
    assert isinstance(series, vp.VdpSeries)
    assert series.coeffs == [1, 0, 1, 1]

    with pytest.raises(vp.Error):
        vp.parse_function_file("p 4\nK 2\nrepr values\n0\n0\n0\n0\n")
