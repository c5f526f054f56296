"""
Tests für hypergeometrische Terme, Gosper, Zeilberger und Summenrekurrenzen
"""

import pytest
from sympy import Poly, Rational, S, Symbol, binomial as binom, expand, factorial, linsolve, symbols

from telescopia.core.polynomial import MultiPoly
from telescopia.core.rational_function import RationalFunction
from telescopia.errors import CertificatePoleError, DomainError, NotFoundError, PoleError, VerificationError
from telescopia.ore.operator import OreAlgebraSpec, OreOperator
from telescopia.summation.gosper import (
    _degree_bound,
    brute_force_partial_sums,
    dispersion_set,
    gosper,
    gosper_petkovsek_form,
    gosper_sum_values,
    verify_gosper,
)
from telescopia.summation.hyperterm import (
    GammaFactor,
    HyperTerm,
    ProperTermExpr,
    compile_proper_term,
    evaluate_term,
)
from telescopia.summation.sum_recurrence import (
    certificate_term_value,
    check_sum_recurrence,
    ct_to_sum_recurrence,
    definite_sum,
)
from telescopia.summation.zeilberger import ShiftTelescoperResult, verify_ct_shift, zeilberger

NK = ("n", "k")


def nk(text):
    return RationalFunction.from_expr(text, NK)


def k_only(text):
    return RationalFunction.from_expr(text, ("k",))


def k_factorial_term(polynomial="k"):
    """polynomial(k)·k!"""
    return compile_proper_term(ProperTermExpr(
        MultiPoly.from_expr(polynomial, NK),
        gamma_factors=(GammaFactor(0, 1, 1, 1),),
    ))


def power_of_two_term():
    return compile_proper_term(ProperTermExpr(MultiPoly.one(NK), d=Rational(2)))


class TestHyperTerm:

    def test_binomial_shift_quotients(self, binomial):
        assert binomial.rho_n == nk("(n + 1)/(n + 1 - k)")
        assert binomial.rho_k == nk("(n - k)/(k + 1)")
        assert binomial.base == 1

    def test_geometric_term(self):
        f = power_of_two_term()
        assert f.rho_k == 2
        assert f.rho_n == 1

    def test_polynomial_times_factorial(self):
        assert k_factorial_term().rho_k == nk("(k + 1)**2/k")

    def test_evaluate_binomial(self, binomial):
        assert evaluate_term(binomial, 4, 2) == 6
        assert evaluate_term(binomial, 3, 5) == 0
        for n0 in range(7):
            assert [evaluate_term(binomial, n0, k0) for k0 in range(n0 + 1)] == [binom(n0, k0) for k0 in range(n0 + 1)]

    def test_evaluate_along_path_hits_pole(self):
        f = HyperTerm.univariate(nk("1/(k - 2)"))
        assert evaluate_term(f, 0, 2) == Rational(1, 2)
        with pytest.raises(PoleError):
            evaluate_term(f, 0, 3)

    def test_gamma_limit_agrees_with_path_product(self, binomial):
        # n!·Γ(n − k + 1)/(k!·Γ(n − k + 1)): die Pole für k > n heben sich auf
        cancelling = compile_proper_term(ProperTermExpr(MultiPoly.one(NK), gamma_factors=(
            GammaFactor(1, 0, 1, 1), GammaFactor(0, 1, 1, -1), GammaFactor(1, -1, 1, 1), GammaFactor(1, -1, 1, -1),
        )))
        assert cancelling.rho_n == nk("n + 1")
        assert cancelling.rho_k == nk("1/(k + 1)")
        assert evaluate_term(cancelling, 2, 5) == Rational(1, 60)
        for f in (cancelling, binomial):
            path = HyperTerm(f.rho_n, f.rho_k, f.base, f.variables)
            assert path.source is None
            for n0 in range(7):
                for k0 in range(9):
                    assert evaluate_term(f, n0, k0) == evaluate_term(path, n0, k0)

    def test_negative_index_is_rejected(self, binomial):
        with pytest.raises(DomainError):
            evaluate_term(binomial, -1, 0)

    def test_shift_quotients_match_values(self, binomial, rng):
        for _ in range(20):
            n0, k0 = rng.randint(1, 15), rng.randint(0, 14)
            if k0 >= n0:
                continue
            value = evaluate_term(binomial, n0, k0)
            assert evaluate_term(binomial, n0 + 1, k0) == binomial.rho_n.evaluate_value({"n": n0, "k": k0}) * value
            assert evaluate_term(binomial, n0, k0 + 1) == binomial.rho_k.evaluate_value({"n": n0, "k": k0}) * value

    def test_incompatible_quotients_raise(self):
        with pytest.raises(DomainError):
            HyperTerm(nk("k"), nk("n"))

    def test_zero_quotient_raises(self):
        with pytest.raises(DomainError):
            HyperTerm(nk("1"), nk("0"))

    def test_proper_term_preconditions(self):
        with pytest.raises(DomainError):
            ProperTermExpr(MultiPoly.zero(NK))
        with pytest.raises(DomainError):
            ProperTermExpr(MultiPoly.one(NK), c=0)
        with pytest.raises(DomainError):
            ProperTermExpr(MultiPoly.from_expr("x", ("x",)))

    def test_pole_at_origin_raises(self):
        with pytest.raises(PoleError):
            compile_proper_term(ProperTermExpr(MultiPoly.one(NK), gamma_factors=(GammaFactor(0, 1, 0, 1),)))


class TestGosper:

    def test_gp_form(self):
        r = k_only("(k + 1)**2/k")
        form = gosper_petkovsek_form(r, "k")
        assert form.a == MultiPoly.from_expr("k + 1", ("k",))
        assert form.b == MultiPoly.one(("k",))
        assert form.c == MultiPoly.from_expr("k", ("k",))
        assert form.ratio("k") == r

    def test_dispersion_set(self):
        k = ("k",)
        assert dispersion_set(MultiPoly.from_expr("k + 3", k), MultiPoly.from_expr("k", k), "k") == [3]
        assert dispersion_set(MultiPoly.from_expr("k + 1", k), MultiPoly.from_expr("k + 2", k), "k") == []

    def test_dispersion_with_parameter(self):
        a = MultiPoly.from_expr("k + n", NK)
        b = MultiPoly.from_expr("k", NK)
        assert dispersion_set(a, b, "k") == []

    def test_k_times_factorial(self):
        result = gosper(k_only("(k + 1)**2/k"), "k")
        assert result is not None
        assert result.certificate == k_only("1/k")
        assert result.to_dict() == {'summable': True, 'variable': 'k', 'certificate': '1/k'}

    def test_geometric(self):
        result = gosper(RationalFunction.constant(2), "k")
        assert result.certificate == 1

    def test_factorial_is_not_summable(self):
        assert gosper(k_only("k + 1"), "k") is None

    @pytest.mark.parametrize("ratio", ["k + 1", "1/(k + 1)", "(k + 1)/(k + 2)", "2*(2*k + 1)/(k + 1)"])
    def test_no_polynomial_solution_beyond_degree_bound(self, ratio):
        r = k_only(ratio)
        assert gosper(r, "k") is None
        form = gosper_petkovsek_form(r, "k")
        A = form.z.num * form.a
        B = form.z.den * form.b.shift("k", -1)
        rhs = form.z.den * form.c
        degree = max(_degree_bound(A, B, rhs.degree("k"), "k"), 0) + 5
        k = Symbol("k")
        unknowns = symbols(f"u0:{degree + 1}")
        x = sum(u * k ** i for i, u in enumerate(unknowns))
        equation = expand(A.to_expr() * x.subs(k, k + 1) - B.to_expr() * x - rhs.to_expr())
        assert linsolve(Poly(equation, k).coeffs(), unknowns) == S.EmptySet

    def test_tampered_certificate_fails(self):
        r = k_only("(k + 1)**2/k")
        result = gosper(r, "k")
        tampered = type(result)(result.certificate + 1, "k")
        assert verify_gosper(r, result)
        assert not verify_gosper(r, tampered)

    def test_partial_sums_of_k_times_factorial(self):
        f = k_factorial_term()
        result = gosper(f.rho_k, "k")
        sums = gosper_sum_values(f, result, 8)
        assert sums == [factorial(m + 1) - 1 for m in range(9)]
        assert sums == brute_force_partial_sums(f, 8)

    @pytest.mark.parametrize("polynomial", ["k**2 + 1", "k**3 - 2*k", "3*k + 5", "k*(k - 1)*(k - 4)"])
    def test_polynomial_terms_are_summable(self, polynomial):
        f = compile_proper_term(ProperTermExpr(MultiPoly.from_expr(polynomial, NK)))
        result = gosper(f.rho_k, "k")
        assert result is not None
        assert verify_gosper(f.rho_k, result)
        assert gosper_sum_values(f, result, 10) == brute_force_partial_sums(f, 10)

    def test_zero_ratio_raises(self):
        with pytest.raises(DomainError):
            gosper(RationalFunction.constant(0), "k")


class TestZeilberger:

    def test_binomial(self, binomial):
        result = zeilberger(binomial, 2)
        assert str(result.telescoper) == "Sn - 2"
        assert result.certificate == nk("-k/(n + 1 - k)")
        assert result.order == 1
        assert verify_ct_shift(binomial, result)

    def test_tampered_certificate_is_rejected(self, binomial):
        result = zeilberger(binomial, 2)
        tampered = ShiftTelescoperResult(result.telescoper, result.certificate + 1)
        assert not verify_ct_shift(binomial, tampered)

    def test_zero_telescoper_is_rejected(self, binomial):
        empty = ShiftTelescoperResult(OreOperator(OreAlgebraSpec.shift("n")), RationalFunction.constant(0))
        assert not verify_ct_shift(binomial, empty)

    def test_directly_summable_term_gives_order_zero(self):
        result = zeilberger(power_of_two_term(), 1)
        assert result.order == 0
        assert str(result.telescoper) == "1"
        assert result.certificate == 1

    def test_binomial_squared(self, binomial_squared_term):
        f = compile_proper_term(binomial_squared_term)
        result = zeilberger(f, 2)
        assert result.order == 1
        assert verify_ct_shift(f, result)
        normalized = result.telescoper.coeffs
        assert normalized[1] == nk("n + 1")
        assert normalized[0] == nk("-(4*n + 2)")

    def test_order_cap(self, binomial_squared_term):
        with pytest.raises(NotFoundError) as exc_info:
            zeilberger(compile_proper_term(binomial_squared_term), 0)
        assert exc_info.value.max_order == 0

    def test_to_dict(self, binomial):
        data = zeilberger(binomial, 2).to_dict()
        assert data['telescoper'] == "Sn - 2"
        assert data['order'] == 1
        assert data['coefficients'] == ['-2', '1']


class TestSumRecurrence:

    def test_binomial_sum(self, binomial):
        rec = ct_to_sum_recurrence(binomial, zeilberger(binomial, 2))
        assert [rec.rhs(n0) for n0 in range(31)] == [0] * 31
        report = check_sum_recurrence(binomial, rec, 21)
        assert report.ok
        assert report.sums == [2 ** m for m in range(21)]
        assert report.to_dict()['verified_terms'] == 21

    def test_binomial_squared_sum(self, binomial_squared_term):
        f = compile_proper_term(binomial_squared_term)
        rec = ct_to_sum_recurrence(f, zeilberger(f, 2))
        report = check_sum_recurrence(f, rec, 21)
        assert report.ok
        assert report.unrolled == [binom(2 * m, m) for m in range(21)]

    def test_order_zero_telescoper(self):
        f = power_of_two_term()
        rec = ct_to_sum_recurrence(f, zeilberger(f, 1))
        assert rec.order == 0
        assert [rec.rhs(n0) for n0 in range(6)] == [2 ** (n0 + 1) - 1 for n0 in range(6)]
        assert check_sum_recurrence(f, rec, 10).ok

    def test_invalid_pair_is_rejected(self, binomial):
        result = zeilberger(binomial, 2)
        with pytest.raises(VerificationError):
            ct_to_sum_recurrence(binomial, ShiftTelescoperResult(result.telescoper, result.certificate + 1))

    def test_definite_sum(self, binomial):
        assert definite_sum(binomial, 5) == 32

    def test_certificate_value_with_cancelled_pole(self):
        f = k_factorial_term()
        assert certificate_term_value(f, nk("1/k"), 0, 0) == 1
        assert certificate_term_value(f, nk("1/k"), 0, 4) == 24

    def test_unresolvable_certificate_pole(self, binomial):
        with pytest.raises(CertificatePoleError):
            certificate_term_value(binomial, nk("1/(k - 1)"), 3, 1)

    def test_certificate_pole_at_upper_boundary(self, binomial, mocker):
        mocker.patch("telescopia.summation.sum_recurrence.verify_ct_shift", return_value=True)
        result = zeilberger(binomial, 2)
        rec = ct_to_sum_recurrence(binomial, ShiftTelescoperResult(result.telescoper, nk("1/(k - 1)")))
        with pytest.raises(CertificatePoleError) as exc_info:
            rec.rhs(0)
        assert exc_info.value.point == {"n": 0, "k": 1}
