"""Signed powers, Schur functors, centralizer algebras, decompositions."""

import pytest

from heckeb.exactlinalg import Subspace
from heckeb.rep import SYMBOLIC, BudgetExceeded, SpecializedBackend
from heckeb.scalars import default_specialization
from heckeb.schur import (
    PM_KINDS,
    check_budget,
    e_hecke_rank1_eigenvalue_count,
    expected_pm_dimension,
    higher_pm_dimension,
    irreducibility_report,
    pm_admissible_tuples,
    pm_power_basis,
    pm_power_dimension,
    pm_power_kernel,
    schur_algebra_dimension,
    schur_algebra_dimension_commutant,
    schur_algebra_dimension_orbit,
    schur_functor_diagram_subspace,
    schur_functor_subspace,
    schur_weyl_decompose,
    signed_tensor_subspace,
    tensor_pm_subspace,
    verify_double_centralizer,
    verify_e_hecke,
)
from heckeb.weylcomb import semistandard_bitableaux_count

SPEC = SpecializedBackend(default_specialization())


class TestSignedPowers:
    @pytest.mark.parametrize("n,d", [(2, 2), (3, 2), (4, 2), (3, 3), (5, 2)])
    @pytest.mark.parametrize("kind", PM_KINDS)
    def test_quotient_dimension(self, kind, n, d):
        assert pm_power_dimension(kind, n, d, SYMBOLIC, "quotient") == expected_pm_dimension(kind, n, d)

    @pytest.mark.parametrize("n,d", [(2, 2), (3, 2), (4, 2), (3, 3)])
    @pytest.mark.parametrize("kind", PM_KINDS)
    def test_kernel_dimension(self, kind, n, d):
        assert pm_power_kernel(kind, n, d, SYMBOLIC).dim == expected_pm_dimension(kind, n, d)

    @pytest.mark.parametrize("n,d", [(3, 2), (4, 2), (3, 3)])
    @pytest.mark.parametrize("kind", PM_KINDS)
    def test_admissible_basis_spans_kernel(self, kind, n, d):
        tuples = pm_admissible_tuples(kind, n, d)
        assert len(tuples) == expected_pm_dimension(kind, n, d)
        kernel = pm_power_kernel(kind, n, d, SYMBOLIC)
        span = Subspace(n**d, (), SYMBOLIC.one)
        for _, vec in pm_power_basis(kind, n, d, SYMBOLIC):
            span.insert(vec)
        assert span == kernel

    def test_tensor_pm_dimensions(self):
        # the two halves are joint eigenspace sums, not complements
        for n, d in [(3, 2), (4, 2), (5, 2)]:
            plus = tensor_pm_subspace(1, n, d, SPEC)
            minus = tensor_pm_subspace(-1, n, d, SPEC)
            assert plus.dim == ((n + 1) // 2) ** d
            assert minus.dim == (n // 2) ** d

    def test_signed_tensor_dimensions_multiply(self):
        n = 5
        assert signed_tensor_subspace(1, 1, n, SPEC).dim == 6
        assert signed_tensor_subspace(2, 1, n, SPEC).dim == 18


class TestSchurFunctor:
    @pytest.mark.parametrize(
        "shape,n",
        [
            (((1,), (1,)), 5),
            (((2,), (1,)), 5),
            (((1,), (2,)), 5),
            (((2,), ()), 3),
            (((1, 1), ()), 3),
            (((1,), (1,)), 3),
        ],
    )
    def test_dimension_matches_tableau_count(self, shape, n):
        sub = schur_functor_subspace(shape, n, SYMBOLIC)
        assert sub.dim == semistandard_bitableaux_count(shape, n)

    @pytest.mark.parametrize("shape", [((1,), (1,)), ((2,), ()), ((), (1, 1))])
    def test_diagram_route_agrees(self, shape):
        n = 3
        assert schur_functor_diagram_subspace(shape, n, SYMBOLIC) == schur_functor_subspace(
            shape, n, SYMBOLIC
        )


class TestSchurAlgebra:
    @pytest.mark.parametrize("n,d,expected", [(3, 1, 5), (3, 2, 15), (5, 2, 91)])
    def test_dimension_two_ways(self, n, d, expected):
        assert schur_algebra_dimension_orbit(n, d, SYMBOLIC) == expected
        if n**d <= 30:
            assert schur_algebra_dimension_commutant(n, d, SYMBOLIC) == expected

    def test_auto_method(self):
        assert schur_algebra_dimension(3, 2, SYMBOLIC) == 15
        assert schur_algebra_dimension(7, 2, SPEC) == 325

    def test_budget_guard(self):
        with pytest.raises(BudgetExceeded):
            check_budget(7, 3, SYMBOLIC)
        check_budget(7, 3, SPEC)


class TestDecomposition:
    @pytest.mark.parametrize("n,d", [(3, 1), (3, 2), (5, 2)])
    def test_ledger(self, n, d):
        led = schur_weyl_decompose(n, d, SYMBOLIC)
        assert led["pass"]
        assert led["sum_dimL_dimM"] == led["tensor_dim"] == n**d
        assert led["sum_dimL_sq"] == led["schur_algebra_dim"]
        for row in led["rows"]:
            assert row["dimL"] == row["dimL_formula"]

    def test_double_centralizer(self):
        for n, d, expected in [(3, 1, 5), (3, 2, 15)]:
            rep = verify_double_centralizer(n, d, SYMBOLIC)
            assert rep["double_centralizer"]
            assert rep["schur_dim"] == rep["coideal_algebra_dim"] == expected

    def test_irreducibility(self):
        report = irreducibility_report(3, 2, SYMBOLIC)
        for (s1, s2), dim in report.items():
            assert dim == (1 if s1 == s2 else 0)


class TestCabled:
    @pytest.mark.parametrize("n,d,e", [(2, 2, 2), (3, 2, 2), (2, 3, 2), (3, 2, 1)])
    def test_e_hecke_consistency(self, n, d, e):
        assert verify_e_hecke(n, d, e, SYMBOLIC)

    def test_rank1_eigenvalue_counts(self):
        s = default_specialization()
        got = [e_hecke_rank1_eigenvalue_count(n, 2, s) for n in (2, 3, 4, 5)]
        assert got == [3, 4, 5, 5]

    @pytest.mark.parametrize("n,d", [(2, 2), (3, 2)])
    @pytest.mark.parametrize("kind", PM_KINDS)
    def test_higher_power_reduces_at_width_one(self, kind, n, d):
        s = default_specialization()
        assert higher_pm_dimension(kind, n, d, 1, s) == expected_pm_dimension(kind, n, d)

    def test_higher_power_values(self):
        s = default_specialization()
        got = {kind: higher_pm_dimension(kind, 3, 2, 2, s) for kind in PM_KINDS}
        assert got == {"s_plus": 8, "s_minus": 6, "wedge_plus": 3, "wedge_minus": 5}
        got2 = {kind: higher_pm_dimension(kind, 2, 2, 2, s) for kind in PM_KINDS}
        assert got2 == {"s_plus": 2, "s_minus": 2, "wedge_plus": 0, "wedge_minus": 1}
