import json
import math

import polylog


def test_bernoulli():
    assert polylog.bern(12) == "-691/2730"
    assert polylog.bern(0) == "1"
    assert polylog.bern(1) == "-1/2"


def test_zeta():
    z = polylog.zeta(2)
    assert math.isclose(z.real, math.pi**2 / 6, rel_tol=1e-12)
    assert abs(z.imag) < 1e-12
    zm1 = polylog.zeta(-1)
    assert math.isclose(zm1.real, -1 / 12, rel_tol=1e-12)


def test_li_continuation():
    v = polylog.li(0, q=2, j=1)
    assert math.isclose(v.real, -0.5, rel_tol=1e-12)
    assert abs(v.imag) < 1e-12


def test_verify_report():
    rep = json.loads(polylog.verify("ramaswami-2", points=3))
    assert rep["identity"] == "ramaswami-2"
    assert rep["pass"] is True
    assert len(rep["points"]) == 3


def test_catalog_listing():
    names = polylog.list_identities()
    assert len(names) == 19
    assert "trans-main" in names
    assert "zeta-series" in names


def test_tangent_and_congruence():
    assert polylog.tangent(4) == "272"
    assert polylog.tangent(4, mod=10) == "2"
    scan = json.loads(polylog.congruence(10))
    assert scan["pass"] is True


def test_zseries():
    assert polylog.zseries("-3/16", 3)[0] == "-1/36"


def test_recurrences():
    assert polylog.check_recurrences("k3", 10)
    assert polylog.check_recurrences("thm41", 5, k=5)
    assert polylog.check_recurrences("tangent5", 8)


if __name__ == "__main__":
    for name, fn in sorted(list(globals().items())):
        if name.startswith("test_") and callable(fn):
            fn()
    print("ok")
