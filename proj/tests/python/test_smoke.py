from fractions import Fraction

import pytest

import resloc


def test_grassmannian_integrals():
    assert resloc.grassmann_integral(4, "(q1+q2)^4") == 2
    assert resloc.grassmann_integral(4, "(q1*q2)^2") == 1
    assert resloc.grassmann_integral(5, "c_top_sym(5)") == 2875
    assert resloc.schur_integral(2, 4, "c_top_sym(3)") == 27


def test_flag_pushforwards_m2():
    table = resloc.flag_pushforwards(2, 3)
    assert table[(1,)] == {0: 1}
    assert table[(2,)] == {1: -3}
    assert table[(3,)] == {2: 6}


def test_j_function_p1():
    j = resloc.j_function(1, 2)
    assert j[1] == {-2: {0: 1}, -3: {1: -2}}
    assert j[2] == {-4: {0: Fraction(1, 4)}, -5: {1: Fraction(-3, 4)}}


def test_mirror_corrections_quintic():
    a, b, c = resloc.mirror_corrections(4, 5, 2)
    assert a[1:] == [-770, -124925]
    assert b[1:] == [-120, -13800]
    assert all(x == 0 for x in c)


def test_quintic_invariants():
    entries = resloc.invariants("hypersurface", n=4, l=5, order=2)
    values = {e["d"]: e["value"] for e in entries if e["a"] == 1 and e["b"] == 1}
    assert values[1] == 2875
    assert values[2] == Fraction(4876875, 2)


def test_quantum_relations():
    assert resloc.qh_relations("Pn", n=2) == ["H^3 - q"]
    assert resloc.qh_relations("product", factors=[1, 1], order=2) == ["H1^2 - q1", "H2^2 - q2"]


def test_errors_carry_codes():
    with pytest.raises(resloc.ResLocError) as info:
        resloc.grassmann_integral(4, "q1^2")
    assert info.value.code == "NotSymmetric"
    with pytest.raises(resloc.ResLocError) as info:
        resloc.mirror_corrections(1, 2)
    assert info.value.code == "DegenerateSystem"


def test_cli_entry():
    status, out, err = resloc.run_cli(["qh", "--target", "Pn", "--n", "1"])
    assert (status, out, err) == (0, "H^2 - q\n", "")
