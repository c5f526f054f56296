"""
Tests für exakte Polynome, rationale Funktionen und Nullräume
"""

import pytest
from sympy import Rational

from telescopia.core.matrix import RatMatrix, mat_nullspace
from telescopia.core.polynomial import MultiPoly, poly_gcd_many, squarefree_part
from telescopia.core.rational_function import RationalFunction
from telescopia.core.univariate import integer_roots
from telescopia.errors import DivisionError, DomainError, PoleError


class TestMultiPoly:

    def test_arithmetic(self, poly):
        p = poly("x + 1") * poly("x - 1")
        assert p == poly("x**2 - 1")
        assert p.degree("x") == 2
        assert p.degree("y") == 0
        assert (p + poly("1")) == poly("x**2")
        assert (-p).leading_coefficient() == -1
        assert poly("x*y**2 + x").total_degree() == 3

    def test_zero_polynomial_degree(self, poly):
        zero = poly("0")
        assert zero.is_zero
        assert zero.degree("x") == -1

    def test_equality_ignores_variable_set(self):
        assert MultiPoly.from_expr("x + 1", ("x",)) == MultiPoly.from_expr("x + 1", ("x", "y"))
        assert hash(MultiPoly.from_expr("x + 1", ("x",))) == hash(MultiPoly.from_expr("x + 1", ("x", "y")))

    def test_gcd_content_convention(self, poly):
        assert poly("2*x + 2").gcd(poly("4*x + 4")) == poly("2*x + 2")
        assert poly("-x*y - y").gcd(poly("x**2 - 1")) == poly("x + 1")

    def test_gcd_of_zero_polynomials_raises(self, poly):
        with pytest.raises(DomainError):
            poly("0").gcd(poly("0"))

    def test_gcd_many(self, poly):
        g = poly_gcd_many([poly("x**2 - 1"), poly("x**2 + 2*x + 1"), poly("3*x + 3")])
        assert g == poly("x + 1")

    def test_exact_division(self, poly):
        assert poly("x**2 - 1").exact_div(poly("x - 1")) == poly("x + 1")
        with pytest.raises(DivisionError):
            poly("x**2 + 1").exact_div(poly("x + 1"))

    def test_primitive_part_has_positive_leading_coefficient(self, poly):
        content, prim = poly("-4*x - 6").primitive()
        assert prim == poly("2*x + 3")
        assert content == -2
        assert prim.scale(content) == poly("-4*x - 6")

    def test_squarefree_part(self, poly):
        part = squarefree_part(poly("(y + x)**2*(y - 1)"), "y")
        ratio = RationalFunction(part) / RationalFunction(poly("(y + x)*(y - 1)"))
        assert ratio.is_constant

    def test_shift_and_evaluate(self, poly):
        p = poly("x**2 + y")
        assert p.shift("x", 1) == poly("x**2 + 2*x + 1 + y")
        assert p.evaluate({"x": 2, "y": Rational(1, 2)}).value() == Rational(9, 2)
        assert p.evaluate({"x": 3}) == poly("9 + y")

    def test_random_shift_round_trip(self, rng, random_poly):
        for _ in range(25):
            p = random_poly(rng.randint(0, 3), deg_x=2)
            h = rng.randint(-4, 4)
            var = rng.choice(["x", "y"])
            assert p.shift(var, h).shift(var, -h) == p

    def test_gcd_of_shared_factors(self, poly):
        g = poly("(x + y)**2*(x - y)").gcd(poly("(x + y)*(x - y)**2"))
        assert g == poly("x**2 - y**2")


class TestRationalFunction:

    def test_canonical_form(self, rat, poly):
        assert rat("(x**2 - 1)/(2*x - 2)") == rat("(x + 1)/2")
        f = rat("1/(-2*x)")
        assert f.den == poly("x")
        assert f.num == MultiPoly.constant(Rational(-1, 2))

    def test_zero_denominator_raises(self):
        with pytest.raises(DivisionError):
            RationalFunction(MultiPoly.one(("x",)), MultiPoly.zero(("x",)))

    def test_division_by_zero_function_raises(self, rat):
        with pytest.raises(DivisionError):
            rat("x") / RationalFunction.constant(0)

    def test_arithmetic(self, rat):
        assert rat("1/x") + rat("1/y") == rat("(x + y)/(x*y)")
        assert rat("x/(x + 1)") * rat("(x + 1)/y") == rat("x/y")
        assert rat("x + 1") ** -2 == 1 / rat("(x + 1)**2")
        assert rat("1/(x + 1)") - rat("1/(x + 1)") == RationalFunction.constant(0)

    def test_derivative_and_shift(self, rat):
        f = rat("1/(x + y**2)")
        assert f.derivative("y") == rat("-2*y/(x + y**2)**2")
        assert f.derivative("x") == rat("-1/(x + y**2)**2")
        assert f.shift("x", 1) == rat("1/(x + 1 + y**2)")

    def test_random_product_rule(self, random_f):
        for _ in range(25):
            f, g = random_f(), random_f()
            for var in ("x", "y"):
                assert (f * g).derivative(var) == f.derivative(var) * g + f * g.derivative(var)

    def test_random_quotient_times_inverse(self, random_f):
        one = RationalFunction.constant(1)
        for _ in range(25):
            a, b = random_f(), random_f()
            assert (a / b) * (b / a) == one
            assert a * (1 / a) == one

    def test_evaluate_at_pole_raises(self, rat):
        with pytest.raises(PoleError):
            rat("1/(x - 1)").evaluate({"x": 1})
        assert rat("1/(x - 1)").evaluate_value({"x": 3}) == Rational(1, 2)

    def test_partial_evaluation(self, rat):
        assert rat("y/(x + y)").evaluate({"y": 1}) == rat("1/(x + 1)")

    def test_str(self):
        f = RationalFunction.from_expr("(x + 1)/(x - 1)", ("x",))
        assert str(f) == "(x + 1)/(x - 1)"
        assert str(RationalFunction.from_expr("1/k", ("k",))) == "1/k"
        assert str(RationalFunction.from_expr("1/(2*k)", ("k",))) == "1/(2*k)"

    def test_value_of_non_constant_raises(self, rat):
        with pytest.raises(DomainError):
            rat("x").value()

    def test_substitute(self, rat):
        f = rat("1/(1 - x*y)")
        z = RationalFunction.variable("z")
        assert f.substitute({"x": z, "y": 1 / z}, ("z",)) is not None
        g = f.substitute({"x": RationalFunction.variable("t"), "y": RationalFunction.variable("t")}, ("t",))
        assert g == RationalFunction.from_expr("1/(1 - t**2)", ("t",))


class TestNullspace:

    def test_constant_matrix(self):
        matrix = RatMatrix.from_rows([[1, 2, 3], [2, 4, 6]])
        basis = mat_nullspace(matrix)
        assert len(basis) == 2
        for vector in basis:
            assert all(entry.is_zero for entry in matrix.apply(vector))

    def test_full_rank_has_trivial_nullspace(self):
        assert mat_nullspace(RatMatrix.from_rows([[1, 0], [0, 1]])) == []

    def test_no_columns(self):
        assert mat_nullspace(RatMatrix(0, 0, ())) == []

    def test_polynomial_matrix_normalisation(self, rat):
        basis = mat_nullspace(RatMatrix.from_rows([[rat("x"), -1]]))
        assert len(basis) == 1
        assert basis[0] == (RationalFunction.constant(1), rat("x"))

    def test_one_row_polynomial_matrix(self, rat):
        basis = mat_nullspace(RatMatrix.from_rows([[rat("x"), rat("x**2")]]))
        assert basis == [(rat("x"), RationalFunction.constant(-1))]

    def test_rational_entries_are_cleared(self, rat):
        basis = mat_nullspace(RatMatrix.from_rows([[rat("1/x"), rat("1/(x + 1)")]]))
        (vector,) = basis
        assert all(entry.is_polynomial for entry in vector)
        assert rat("1/x") * vector[0] + rat("1/(x + 1)") * vector[1] == RationalFunction.constant(0)

    def test_shape_mismatch_raises(self, rat):
        with pytest.raises(DomainError):
            RatMatrix(1, 2, ((rat("x"),),))

    def test_random_polynomial_matrices(self, rng, random_poly):
        for _ in range(10):
            rows = [[RationalFunction(random_poly(rng.randint(0, 1))) for _ in range(4)] for _ in range(2)]
            matrix = RatMatrix.from_rows(rows)
            basis = mat_nullspace(matrix)
            assert len(basis) >= 2
            for vector in basis:
                assert all(entry.is_zero for entry in matrix.apply(vector))


class TestIntegerRoots:

    def test_integer_roots(self):
        assert integer_roots(MultiPoly.from_expr("k**3 - k", ("k",)), "k") == [-1, 0, 1]

    def test_rational_coefficients(self):
        assert integer_roots(MultiPoly.from_expr("k**2/2 - 2", ("k",)), "k") == [-2, 2]

    def test_no_roots(self):
        assert integer_roots(MultiPoly.from_expr("2*k + 1", ("k",)), "k") == []

    def test_zero_polynomial_raises(self):
        with pytest.raises(DomainError):
            integer_roots(MultiPoly.zero(("k",)), "k")
