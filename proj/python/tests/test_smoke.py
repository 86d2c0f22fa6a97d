import pytest

import subscheme_calc as sc


def test_ideal_operations():
    a = sc.Algebra(["x", "y"])
    i = sc.Ideal(a, ["x"])
    j = sc.Ideal(a, ["y"])
    assert (i & j).basis == ["x*y"]
    assert (i + j).basis == ["x", "y"]
    assert "x*y^2" in i
    assert sc.Ideal(a, ["x", "1 - x"]).is_unit


def test_saturation_and_elimination():
    a = sc.Algebra(["x", "y"])
    assert sc.saturate(sc.Ideal(a, ["x^2*y"]), "x") == sc.Ideal(a, ["y"])
    e = sc.eliminate(sc.Ideal(a, ["x - y^2", "x"]), 1)
    assert e.basis == ["y^2"]


def test_quotient_algebra_and_maps():
    r = sc.Algebra(["x", "y"], ["y - x^2"])
    assert r.reduce("x^2*y") == "y^2"
    t = sc.Algebra(["t"])
    phi = sc.RingMap(sc.Algebra(["x", "y"]), t, ["t", "t^2"])
    assert phi.validate()
    assert phi.kernel().basis == sc.Ideal(sc.Algebra(["x", "y"]), ["x^2 - y"]).basis
    assert phi("x*y") == "t^3"


def test_projective_line_monoid():
    p1 = sc.samples.projective_line()
    z = sc.Subscheme(p1, [["u"], ["1"]])
    w = sc.Subscheme(p1, [["u - 1"], ["1 - v"]])
    assert z.validate().ok and w.validate().ok
    assert z * w == sc.empty(p1)
    assert z + sc.empty(p1) == z
    assert z * sc.whole(p1) == z
    assert (z + w).validate().ok


def test_diagonal_violates_additive_law():
    d = sc.samples.diagonal()
    plane = d.target
    vx = sc.Subscheme(plane, [["x"]])
    vy = sc.Subscheme(plane, [["y"]])
    lhs = sc.pullback(d, vx + vy)
    rhs = sc.pullback(d, vx) + sc.pullback(d, vy)
    assert str(lhs) == "[ (t^2) ]"
    assert str(rhs) == "[ (t) ]"
    report = sc.check_additive_law(d, vx, vy)
    assert any(line[0] == sc.Status.VIOLATED for line in report.lines)


def test_oracle():
    assert sc.oracle.int_mul(12, 18) == 6
    assert sc.oracle.int_add(12, 18) == 36
    assert sc.oracle.prime_support(360) == [2, 3, 5]
    q = sc.Algebra(["x"])
    assert sc.oracle.uni_gcd(q, "x^2 - 1", "x^2 + 2*x + 1") == "x + 1"


def test_laws_and_script():
    report = sc.run_laws("oracle", max_n=50)
    assert report.ok
    out, err, code = sc.run_script("ring R = QQ[x];\nscheme X { patch R; }\n"
                                   "subscheme Z of X = [ (x^2) ];\neval mul(Z, Z);\n")
    assert code == 0, err
    assert "(x^2)" in out


def test_errors_are_raised():
    a = sc.Algebra(["x"])
    with pytest.raises(sc.Error):
        a.reduce("x +")
    with pytest.raises(sc.Error):
        sc.Algebra(["#x"])
