"""
Unit tests for the Grassmann polynomial engine, determinants, differential
operators and the harmonicity checks.
"""

import sys
from pathlib import Path

import pytest
from sympy import Rational

# Add parent directory to path
sys.path.insert(0, str(Path(__file__).parent.parent.parent))

from src.core.combinatorics import (
    Partition,
    enumerate_hook_tableaux,
    enumerate_partitions,
    enumerate_ssyt,
)
from src.core.errors import OperatorIndexError, PartitionConstraintError
from src.core.grassmann import (
    SuperPoly,
    basis_vectors,
    build_determinant,
    check_highest_harmonic,
    eta,
    glmn_operator,
    glmn_weight,
    graded_dimension,
    hwv_vector,
    lie_operator,
    operator_commutator_vanishes,
    span_rank,
    spanning_monomials,
    super_determinant,
    tableau_dimension_sum,
    x,
)
from src.core.wgroups import DualPair
from src.data import compute_config
from src.verify.selftest import harmonic_cases, harmonic_suite_check, span_rank_check


def var(v):
    return SuperPoly.var(v)


# ============================================================================
# Tests for SuperPoly
# ============================================================================

class TestSuperPoly:
    """Test suite for supercommutative polynomial arithmetic."""

    @pytest.mark.unit
    @pytest.mark.fast
    def test_odd_variables_anticommute(self):
        """Test eta_1^1 eta_1^2 = -eta_1^2 eta_1^1."""
        assert var(eta(1, 1)) * var(eta(1, 2)) == -(var(eta(1, 2)) * var(eta(1, 1)))

    @pytest.mark.unit
    @pytest.mark.fast
    def test_odd_square_vanishes(self):
        """Test eta^2 = 0."""
        assert (var(eta(1, 1)) * var(eta(1, 1))).is_zero()

    @pytest.mark.unit
    @pytest.mark.fast
    def test_even_variables_commute(self):
        """Test x_1^1 x_2^1 = x_2^1 x_1^1."""
        assert var(x(1, 1)) * var(x(2, 1)) == var(x(2, 1)) * var(x(1, 1))

    @pytest.mark.unit
    @pytest.mark.fast
    def test_degree_and_variables(self):
        """Test degree counts odd variables once."""
        p = var(x(1, 1)) * var(x(1, 1)) * var(eta(1, 2))
        assert p.degree() == 3
        assert p.variables() == [eta(1, 2), x(1, 1)]

    @pytest.mark.unit
    @pytest.mark.fast
    def test_even_derivative(self):
        """Test d/dx (x^2) = 2x."""
        square = var(x(1, 1)) * var(x(1, 1))
        assert square.derive(x(1, 1)) == var(x(1, 1)).scale(2)

    @pytest.mark.unit
    @pytest.mark.fast
    def test_odd_derivative_signs(self):
        """Test left derivatives of eta_1^1 eta_1^2."""
        p = var(eta(1, 1)) * var(eta(1, 2))
        assert p.derive(eta(1, 1)) == var(eta(1, 2))
        assert p.derive(eta(1, 2)) == -var(eta(1, 1))

    @pytest.mark.unit
    @pytest.mark.fast
    def test_pretty(self):
        """Test text rendering."""
        assert SuperPoly().pretty() == '0'
        assert (var(x(1, 1)) + var(x(1, 2)).scale(2)).pretty() == 'x1^1 + 2*x1^2'


# ============================================================================
# Tests for determinants and highest weight vectors
# ============================================================================

class TestDeterminants:
    """Test suite for super determinants."""

    @pytest.mark.unit
    @pytest.mark.fast
    def test_even_determinant(self):
        """Test Delta_2 = x_1^1 x_2^2 - x_1^2 x_2^1."""
        expected = var(x(1, 1)) * var(x(2, 2)) - var(x(1, 2)) * var(x(2, 1))
        assert build_determinant('delta', 2, 2, 0, r=2) == expected

    @pytest.mark.unit
    @pytest.mark.fast
    def test_repeated_odd_row_survives(self):
        """Test a repeated odd row gives twice the product, not zero."""
        det = super_determinant([('eta', 1), ('eta', 1)], [1, 2])
        assert det == (var(eta(1, 1)) * var(eta(1, 2))).scale(2)

    @pytest.mark.unit
    @pytest.mark.fast
    def test_mixed_determinant(self):
        """Test Delta_(1,2) with one even row."""
        det = build_determinant('delta_k', 2, 1, 1, r=2, k=1)
        expected = var(x(1, 1)) * var(eta(1, 2)) - var(x(1, 2)) * var(eta(1, 1))
        assert det == expected

    @pytest.mark.unit
    @pytest.mark.fast
    @pytest.mark.parametrize("kind,kwargs", [
        ('delta', {'r': 3}),
        ('delta_k', {'r': 1, 'k': 1}),
        ('bogus', {}),
    ])
    def test_invalid_determinants(self, kind, kwargs):
        """Test determinant preconditions."""
        with pytest.raises(PartitionConstraintError):
            build_determinant(kind, 2, 1, 1, **kwargs)

    @pytest.mark.unit
    @pytest.mark.fast
    def test_hwv_vector(self):
        """Test highest weight vectors of (1) and (1,1)."""
        assert hwv_vector(Partition((1,)), 1, 1, 0) == var(x(1, 1))
        assert hwv_vector(Partition((1, 1)), 2, 1, 1) == build_determinant('delta_k', 2, 1, 1, r=2, k=1)

    @pytest.mark.unit
    @pytest.mark.fast
    def test_hwv_requires_hook(self):
        """Test lam must fit l(lam) <= d and the hook."""
        with pytest.raises(PartitionConstraintError):
            hwv_vector(Partition((1, 1)), 1, 1, 1)

    @pytest.mark.unit
    @pytest.mark.fast
    def test_glmn_weight(self):
        """Test the shifted weight of x_1^1 for d = 2."""
        assert glmn_weight(var(x(1, 1)), 2, 1, 1) == (Rational(2), Rational(-1))
        assert glmn_weight(var(x(1, 1)) + var(eta(1, 1)), 2, 1, 1) is None


# ============================================================================
# Tests for operators
# ============================================================================

class TestOperators:
    """Test suite for Lie algebra operators."""

    @pytest.mark.unit
    @pytest.mark.fast
    def test_diagonal_operator_carries_shift(self):
        """Test E^{xx}_11 x_1^1 = (1 + d/2) x_1^1 for d = 2."""
        op = glmn_operator(1, 1, 'x-x', 2, 1, 0)
        assert op.apply(var(x(1, 1))) == var(x(1, 1)).scale(2)

    @pytest.mark.unit
    @pytest.mark.fast
    def test_laplacian(self):
        """Test the O(1) Laplacian on x^2."""
        op = lie_operator('O_laplacian', ('x-x', 1, 1), 1, 1, 0)
        assert op.apply(var(x(1, 1)) * var(x(1, 1))) == SuperPoly.constant(2)

    @pytest.mark.unit
    @pytest.mark.fast
    @pytest.mark.parametrize("family,indices,d,m,n", [
        ('gl_d_raise', (1,), 2, 1, 0),
        ('glmn_raise', (3,), 1, 1, 1),
        ('Gamma', (2,), 1, 1, 1),
        ('O_laplacian', ('eta-eta', 1, 1), 1, 0, 1),
        ('Sp_laplacian', ('x-x', 1, 1), 2, 1, 0),
        ('Sp_laplacian', ('x-x', 1, 2), 3, 2, 0),
        ('O_laplacian', ('y-y', 1, 1), 1, 1, 0),
        ('Delta', (1,), 1, 1, 0),
    ])
    def test_out_of_range_indices(self, family, indices, d, m, n):
        """Test OperatorIndexError for invalid operator requests."""
        with pytest.raises(OperatorIndexError):
            lie_operator(family, indices, d, m, n)

    @pytest.mark.unit
    @pytest.mark.fast
    def test_unknown_glmn_kind(self):
        """Test an unknown gl(m|n) operator kind."""
        with pytest.raises(OperatorIndexError):
            glmn_operator(1, 1, 'x-y', 1, 1, 1)

    @pytest.mark.unit
    @pytest.mark.fast
    def test_left_and_right_actions_commute(self):
        """Test a gl(d) raise commutes with a gl(m|n) raise."""
        a = lie_operator('gl_d_raise', (2,), 2, 2, 0)
        b = lie_operator('glmn_raise', (2,), 2, 2, 0)
        polys = spanning_monomials([x(l, i) for l in (1, 2) for i in (1, 2)], 2)
        assert operator_commutator_vanishes(a, b, polys)

    @pytest.mark.unit
    @pytest.mark.fast
    def test_laplacian_and_invariant_do_not_commute(self):
        """Test [Laplacian, invariant] is non-zero on the constant."""
        lap = lie_operator('O_laplacian', ('x-x', 1, 1), 1, 1, 0)
        inv = lie_operator('O_invariant', ('x-x', 1, 1), 1, 1, 0)
        assert not operator_commutator_vanishes(lap, inv, [SuperPoly.constant()])


# ============================================================================
# Tests for harmonicity and dimension checks
# ============================================================================

class TestChecks:
    """Test suite for harmonic highest weight vectors and rank checks."""

    @pytest.mark.unit
    @pytest.mark.fast
    @pytest.mark.parametrize("rows,d,m,n,pair,count", [
        ((1,), 1, 1, 0, DualPair.O_SP, 1),
        ((), 1, 1, 1, DualPair.O_SP, 3),
        ((1,), 2, 1, 0, DualPair.SP_SO, 1),
        ((1,), 2, 2, 0, DualPair.SP_SO, 3),
    ])
    def test_highest_weight_vectors_are_harmonic(self, rows, d, m, n, pair, count):
        """Test every raising operator and Laplacian kills the vector."""
        report = check_highest_harmonic(Partition(rows), d, m, n, pair)
        assert report.all_zero
        assert report.operators_checked == count
        assert report.to_json()['all_zero'] is True

    @pytest.mark.unit
    @pytest.mark.slow
    @pytest.mark.parametrize("lam,d,m,n,pair", harmonic_cases(*compute_config.HARMONIC_BOUNDS))
    def test_every_admissible_vector_is_harmonic(self, lam, d, m, n, pair):
        """Test harmonicity for every admissible label with at most four boxes."""
        report = check_highest_harmonic(lam, d, m, n, pair)
        assert report.all_zero, report.failures

    @pytest.mark.unit
    @pytest.mark.fast
    @pytest.mark.parametrize("rows,d,pair", [
        ((2,), 1, DualPair.O_SP),
        ((1, 1), 2, DualPair.SP_SO),
        ((), 3, DualPair.SP_SO),
    ])
    def test_invalid_labels(self, rows, d, pair):
        """Test labels outside the pair's range."""
        with pytest.raises(PartitionConstraintError):
            check_highest_harmonic(Partition(rows), d, 1, 1, pair)

    @pytest.mark.unit
    @pytest.mark.fast
    def test_span_rank(self):
        """Test the rank of a dependent family."""
        assert span_rank([var(x(1, 1)), var(x(1, 1)).scale(2), var(x(1, 2))]) == 2
        assert span_rank([]) == 0

    @pytest.mark.unit
    @pytest.mark.fast
    def test_basis_vectors_span(self):
        """Test the tableau vectors of (1) span the degree-1 part."""
        assert span_rank(basis_vectors(Partition((1,)), 2, 1, 1)) == 2
        assert span_rank(basis_vectors(Partition((1,)), 2, 1, 1, paired=True)) == graded_dimension(2, 1, 1, 1)

    @pytest.mark.unit
    @pytest.mark.slow
    @pytest.mark.parametrize("d", [1, 2])
    @pytest.mark.parametrize("m,n", [(1, 1), (1, 2), (2, 1), (2, 2)])
    def test_tableau_vectors_are_independent(self, d, m, n):
        """Test span ranks equal tableau counts for every lam with at most three boxes."""
        for lam in enumerate_partitions(3, max_length=d, hook=(m, n)):
            hooks = len(enumerate_hook_tableaux(lam, m, n))
            assert span_rank(basis_vectors(lam, d, m, n)) == hooks, lam
            paired = span_rank(basis_vectors(lam, d, m, n, paired=True))
            assert paired == hooks * len(enumerate_ssyt(lam, d)), lam

    @pytest.mark.unit
    @pytest.mark.slow
    def test_suite_reports(self):
        """Test the selftest reports for the harmonic and span rank suites."""
        harmonic = harmonic_suite_check(2, 2, 1)
        assert harmonic.ok, harmonic.first_mismatch
        assert harmonic.terms_checked > 0
        ranks = span_rank_check(2, 2, 1)
        assert ranks.ok, ranks.first_mismatch

    @pytest.mark.unit
    @pytest.mark.fast
    @pytest.mark.parametrize("d,m,n,degree,dim", [
        (1, 1, 1, 2, 2),
        (2, 1, 0, 2, 3),
        (2, 1, 1, 1, 4),
        (1, 0, 2, 2, 1),
    ])
    def test_graded_dimension_matches_tableaux(self, d, m, n, degree, dim):
        """Test dim S^k(C^d (x) C^(m|n)) against the tableau count."""
        assert graded_dimension(d, m, n, degree) == dim
        assert tableau_dimension_sum(d, m, n, degree) == dim
