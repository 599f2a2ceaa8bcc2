import json

import pytest

import perpetuants as pp


def test_cubic_basis():
    (u,) = pp.u_basis(3, 3)
    assert u.k == [0, 1]
    assert str(u.value) == "3*a0^2*a3 - 3*a0*a1*a2 + a1^3"
    assert u.value.D().is_zero()
    assert u.value.is_translation_invariant()
    assert u.value.bidegree() == (3, 3)


def test_basis_matches_kernel():
    for n in range(1, 5):
        for g in range(0, 9):
            values = [e.value for e in pp.u_basis(n, g)]
            assert pp.span_equal(values, pp.kernel_oracle(n, g))


def test_series():
    assert pp.dim_series(3, 6) == [1, 0, 1, 1, 1, 1, 2]
    assert pp.stroh_series(3, 9)[3:] == [1, 0, 1, 1, 1, 1, 2]
    assert pp.threshold(5) == [0, 2, 1, 1]


def test_certificate():
    c = pp.verify_complement(4, 6)
    assert c.ok
    assert json.loads(c.to_json()) == {
        "n": 4, "g": 6, "dim_total": 3, "dim_dec": 3, "dim_perp": 0, "stroh": 0, "ok": True,
    }
    assert len(pp.perpetuant_basis(4, 7)) == 1


def test_poly_arithmetic_and_json():
    a0, a1, a2 = (pp.Poly.variable(i) for i in range(3))
    b = a1 ** 2 - pp.Poly("2") * a0 * a2
    assert b == pp.Poly("-2*a0*a2 + a1^2")
    assert pp.Poly.from_json(b.to_json()) == b
    assert str(pp.degree2_perpetuant(4)) == "2*a0*a4 - 2*a1*a3 + a2^2"
    assert str(pp.c_k(3)) == "a0^2*a3 - a0*a1*a2 + 1/3*a1^3"


def test_misc():
    assert pp.potenziante_text(3, 2) == "m_{2,0,0}*a0^2*a2 + m_{1,1,0}*a0*a1^2"
    assert pp.q_n_leading_exponent(4) == [4, 2, 1]
    assert all(ok for _, ok in pp.relations())


def test_errors():
    with pytest.raises(pp.ParseError):
        pp.Poly("a1 +")
    with pytest.raises(pp.InhomogeneousError):
        (pp.Poly("a0 + a1")).bidegree()
    with pytest.raises(pp.DomainError):
        pp.threshold(2)
    with pytest.raises(pp.Error):
        pp.degree2_perpetuant(3)
