import math
from fractions import Fraction

import mpmath
import pytest
import sympy

from kzeta.errors import CapacityError, DomainError, PoleError, UnsupportedConfigurationError
from kzeta.fpi import (
    Kernel,
    ac_reference,
    finite_part,
    is_mellin_pole,
    kernel_expansion,
    mellin_point,
    paper_claim_audit,
)
from kzeta.series import dirichlet_value

ADMISSIBLE = [("csch", -1), ("csch", -3), ("csch", -5), ("sech", -2), ("sech", -4)]


def _sympy_coefficients(kernel, order):
    x = sympy.symbols("x")
    expr = 1 / sympy.sinh(x) if kernel == "csch" else 1 / sympy.cosh(x)
    poly = sympy.series(expr, x, 0, order + 1).removeO()
    out = {}
    for term in sympy.Add.make_args(poly):
        c, e = term.as_coeff_exponent(x)
        out[int(e)] = Fraction(int(sympy.fraction(c)[0]), int(sympy.fraction(c)[1]))
    return out


@pytest.mark.parametrize("kernel", ["csch", "sech"])
@pytest.mark.parametrize("order", [1, 4, 9, 16])
def test_expansion_against_sympy(kernel, order):
    e = kernel_expansion(kernel, order)
    assert dict(zip(e.exponents, e.coefficients)) == _sympy_coefficients(kernel, order)
    assert e.kernel is Kernel(kernel)


def test_expansion_examples():
    e = kernel_expansion("csch", 3)
    assert e.exponents == (-1, 1, 3)
    assert e.coefficients == (1, Fraction(-1, 6), Fraction(7, 360))
    e = kernel_expansion("sech", 4)
    assert e.exponents == (0, 2, 4)
    assert e.coefficients == (1, Fraction(-1, 2), Fraction(5, 24))
    assert abs(1 / math.sinh(0.5) - (1 / 0.5 - 0.5 / 6)) <= 7 * 0.5 ** 3 / 360


@pytest.mark.parametrize("kernel", ["csch", "sech"])
@pytest.mark.parametrize("order", range(1, 16))
def test_remainder_bound(kernel, order):
    e = kernel_expansion(kernel, order)
    nxt = kernel_expansion(kernel, e.next_exponent())
    q = float(nxt.coefficients[-1])
    K = (lambda x: 1 / math.sinh(x)) if kernel == "csch" else (lambda x: 1 / math.cosh(x))
    for i in range(1, 21):
        x = i / 20
        bound = abs(q) * x ** e.next_exponent()
        assert abs(K(x) - e.evaluate(x)) <= bound * (1 + 1e-9) + 1e-15


def test_expansion_errors():
    with pytest.raises(CapacityError):
        kernel_expansion("csch", 41)
    with pytest.raises(DomainError):
        kernel_expansion("csch", -3)


def test_subtracted_terms_example():
    r = finite_part("csch", -3, 1.0)
    assert r.subtracted_terms == ((-4, Fraction(1)), (-2, Fraction(-1, 6)))
    assert r.kernel is Kernel.CSCH and r.power == -3 and r.split_point == 1.0


def test_compensation_for_minus_four():
    r = finite_part("sech", -4, 1.0)
    assert r.subtracted_terms == ((-4, Fraction(1)), (-2, Fraction(-1, 2)))
    # -1/3 from x^-4 and -(-1/2) from x^-2
    assert r.compensation == pytest.approx(-1 / 3 + 1 / 2, abs=1e-15)


@pytest.mark.parametrize("kernel, p", ADMISSIBLE)
def test_split_invariance(kernel, p):
    vals = [finite_part(kernel, p, c).value for c in (0.5, 1.0, 2.0)]
    assert max(vals) - min(vals) <= 1e-10


@pytest.mark.parametrize("kernel, p", ADMISSIBLE)
def test_split_invariance_off_grid(kernel, p):
    ref = finite_part(kernel, p).value
    for c in (0.1, 0.73, 3.5):
        assert abs(finite_part(kernel, p, c).value - ref) <= 1e-10


def lowest_order(kernel, p):
    for order in range(12):
        try:
            finite_part(kernel, p, 1.0, order)
            return order
        except DomainError:
            continue
    raise AssertionError("no admissible order")


@pytest.mark.parametrize("kernel, p", ADMISSIBLE)
def test_order_stability(kernel, p):
    low = lowest_order(kernel, p)
    a = finite_part(kernel, p, 1.0, low).value
    b = finite_part(kernel, p, 1.0, low + 2).value
    assert abs(a - b) <= 1e-11


def test_order_too_small():
    with pytest.raises(DomainError):
        finite_part("csch", -3, 1.0, 1)


@pytest.mark.parametrize("kernel, p", ADMISSIBLE)
def test_fp_equals_ac(kernel, p):
    assert abs(finite_part(kernel, p).value - ac_reference(kernel, mellin_point(p))) <= 1e-9


def test_fp_identity_values():
    z3 = dirichlet_value("zeta", 3)
    assert abs(finite_part("csch", -3).value - 3 * z3 / (4 * math.pi ** 2)) <= 1e-9
    assert abs(ac_reference("csch", -2) - 0.0913453711751797) <= 1e-12


@pytest.mark.parametrize("kernel, p", ADMISSIBLE)
@pytest.mark.parametrize("c", [0.5, 1.0, 2.0])
def test_reconstruction(kernel, p, c):
    r = finite_part(kernel, p, c)
    assert abs(r.value - (r.regular_part + r.compensation + r.tail)) <= 1e-13


@pytest.mark.parametrize("kernel, p", [("csch", -2), ("csch", -4), ("sech", -1), ("sech", -3)])
def test_resonant_exponent(kernel, p):
    with pytest.raises(UnsupportedConfigurationError):
        finite_part(kernel, p)


@pytest.mark.parametrize("p, c", [(0, 1.0), (1, 1.0), (-3, 0.0), (-3, -1.0), (-2.5, 1.0), (-3, math.inf)])
def test_finite_part_domain(p, c):
    kernel = "sech" if p == -2.5 else "csch"
    with pytest.raises(DomainError):
        finite_part(kernel, p, c)


def _mp_mellin(kernel, s):
    with mpmath.workdps(60):
        s = mpmath.mpf(s) + mpmath.mpf(10) ** -30
        if kernel == "csch":
            v = 2 * (1 - mpmath.mpf(2) ** -s) * mpmath.gamma(s) * mpmath.zeta(s)
        else:
            v = 2 * mpmath.gamma(s) * mpmath.dirichlet(s, [0, 1, 0, -1])
        return float(v)


@pytest.mark.parametrize("kernel, s", [("csch", 3), ("csch", 0), ("csch", -2), ("csch", -4),
                                       ("sech", 2), ("sech", -1), ("sech", -3), ("sech", 0.5)])
def test_ac_reference_against_mpmath(kernel, s):
    assert ac_reference(kernel, s) == pytest.approx(_mp_mellin(kernel, s), rel=1e-10, abs=1e-12)


def test_ac_reference_regular_point():
    assert ac_reference("csch", 3) == pytest.approx(3.5 * dirichlet_value("zeta", 3), rel=1e-15)


@pytest.mark.parametrize("kernel, s", [("csch", 1), ("csch", -1), ("csch", -3), ("sech", 0), ("sech", -2)])
def test_poles(kernel, s):
    assert is_mellin_pole(kernel, s)
    with pytest.raises(PoleError):
        ac_reference(kernel, s)


def test_non_poles():
    assert not is_mellin_pole("csch", 0)
    assert not is_mellin_pole("csch", -2)
    assert not is_mellin_pole("sech", -1)
    assert not is_mellin_pole("sech", 0.5)


def test_audit_entries():
    report = paper_claim_audit()
    assert report.ok
    by_name = {e.name: e for e in report.entries}
    z = by_name["audit.zeta3_fpi"]
    assert not z.passed
    assert z.computed == pytest.approx(-0.5 * finite_part("csch", -3).value, rel=1e-14)
    x = by_name["audit.xi2_limit"]
    assert not x.passed
    assert x.computed / x.expected == pytest.approx(0.75, rel=1e-14)
    assert "0.75" in x.note
    assert by_name["audit.mellin_s3"].passed
    for name in ("audit.beta2_fpi", "audit.ck_sinh_pi_n1", "audit.ck_sinh_pi_n2",
                 "audit.zeta3_fpi_sinh_m1", "audit.beta2_fpi_cosh_m1"):
        assert not by_name[name].passed
        assert "ratio" in by_name[name].note
