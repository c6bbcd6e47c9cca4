"""
Integration tests for the exact identity verification suites.

Each identity builds both sides from the full stack (combinatorics, series,
classical and super characters) and compares them coefficient by
coefficient.
"""

import sys
from pathlib import Path

import pytest

# Add parent directory to path
sys.path.insert(0, str(Path(__file__).parent.parent.parent))

from src.core.errors import IdentityParameterError
from src.core.series import PowerSeries, SeriesLayout
from src.data import compute_config
from src.verify.identities import (
    IDENTITY_IDS,
    compare_series,
    graded_dimension_check,
    identity_sides,
    verify_identity,
)
from src.verify.selftest import _checks, index_set_oracle_check, run_selftest, tensor_stability_cases


# ============================================================================
# Tests for the comparison primitive
# ============================================================================

class TestCompareSeries:
    """Test suite for exact series comparison."""

    @pytest.mark.integration
    @pytest.mark.fast
    def test_equal_series(self, yz_layout):
        """Test equal series report no mismatch."""
        a = PowerSeries(yz_layout, {(0, 0): 1, (1, 1): 2})
        mismatch, checked = compare_series(a, a)
        assert mismatch is None
        assert checked == 2

    @pytest.mark.integration
    @pytest.mark.fast
    def test_first_mismatch_in_graded_lex_order(self, yz_layout):
        """Test the lowest-degree differing monomial is reported."""
        a = PowerSeries(yz_layout, {(0, 0): 1, (1, 0): 1, (2, 0): 5})
        b = PowerSeries(yz_layout, {(0, 0): 1, (2, 0): 4})
        mismatch, checked = compare_series(a, b)
        assert mismatch == {'monomial': {'x': [], 'y': [1], 'z': [0], 'eps': 0}, 'lhs': '1', 'rhs': '0'}
        assert checked == 2


# ============================================================================
# Tests for identity verification
# ============================================================================

class TestIdentities:
    """Test suite for the duality and closed-form identities."""

    @pytest.mark.integration
    @pytest.mark.parametrize("identity,d,m,n,degree", compute_config.QUICK_IDENTITY_GRID)
    def test_quick_grid(self, identity, d, m, n, degree):
        """Test every identity on the quick grid matches exactly."""
        report = verify_identity(identity, d, m, n, degree)
        assert report.ok, report.first_mismatch
        assert report.status == 'exact-match'
        assert report.terms_checked > 0

    @pytest.mark.integration
    @pytest.mark.slow
    @pytest.mark.parametrize("identity,d,m,n,degree", compute_config.FULL_IDENTITY_GRID)
    def test_full_grid(self, identity, d, m, n, degree):
        """Test every identity on the full grid matches exactly."""
        report = verify_identity(identity, d, m, n, degree)
        assert report.ok, report.first_mismatch

    @pytest.mark.integration
    @pytest.mark.parametrize("identity,d,m,n,degree", [
        ('sp-osp', 2, 1, 1, 3),
        ('sp-osp', 2, 1, 1, 4),
        ('sp-osp', 2, 1, 1, 5),
        ('sp-osp', 4, 1, 1, 5),
        ('hs-stability', 2, 1, 1, 4),
        ('hs-stability', 2, 2, 2, 5),
    ])
    def test_sp_pair_at_low_rank(self, identity, d, m, n, degree):
        """Test the Sp(d) dualities where the truncation rank is tight."""
        report = verify_identity(identity, d, m, n, degree)
        assert report.ok, report.first_mismatch

    @pytest.mark.integration
    @pytest.mark.fast
    def test_cauchy_sides(self):
        """Test the glgl sides in one variable each."""
        lhs, rhs = identity_sides('glgl', 1, 1, 0, 3)
        assert lhs == rhs
        assert lhs.terms == {(k, k): 1 for k in range(4)}

    @pytest.mark.integration
    @pytest.mark.fast
    def test_report_json(self):
        """Test the serialized report."""
        report = verify_identity('o-sp', 1, 1, 0, 3)
        data = report.to_json()
        assert data['identity'] == 'o-sp'
        assert data['parameters'] == {'d': 1, 'm': 1, 'n': 0, 'degree': 3}
        assert data['status'] == 'exact-match'
        assert data['first_mismatch'] is None

    @pytest.mark.integration
    @pytest.mark.fast
    @pytest.mark.parametrize("identity,d,m,n", [
        ('o-sp', 1, 1, 1),
        ('sp-so', 3, 1, 0),
        ('sp-osp', 1, 1, 1),
        ('o-invariants', 2, 1, 1),
        ('sp-invariants', 3, 1, 1),
        ('gl-gl', 1, 1, 1),
        ('glgl', 0, 1, 1),
    ])
    def test_invalid_parameters(self, identity, d, m, n):
        """Test identity/parameter combinations that are refused."""
        with pytest.raises(IdentityParameterError):
            verify_identity(identity, d, m, n, 3)

    @pytest.mark.integration
    @pytest.mark.fast
    def test_stability_has_no_two_sides(self):
        """Test hs-stability is only available through verify_identity."""
        with pytest.raises(IdentityParameterError):
            identity_sides('hs-stability', 1, 1, 1, 3)

    @pytest.mark.integration
    @pytest.mark.fast
    def test_identity_ids(self):
        """Test the published identity ids."""
        assert IDENTITY_IDS == ('glgl', 'o-sp', 'sp-so', 'o-spo', 'sp-osp',
                                'o-invariants', 'sp-invariants', 'trivial-hs', 'hs-stability')


# ============================================================================
# Tests for oracle and dimension suites
# ============================================================================

class TestSuites:
    """Test suite for the oracle, dimension and selftest runners."""

    @pytest.mark.integration
    @pytest.mark.oracle
    def test_index_sets_agree_with_oracle(self):
        """Test closed index sets against the root-condition oracle."""
        report = index_set_oracle_check(3, 4, 6)
        assert report.ok, report.first_mismatch
        assert report.terms_checked > 0

    @pytest.mark.integration
    @pytest.mark.fast
    @pytest.mark.parametrize("d,m,n", [(1, 1, 1), (2, 1, 1), (2, 2, 1), (3, 1, 2)])
    def test_graded_dimension(self, d, m, n):
        """Test the graded dimension identity up to degree 4."""
        report = graded_dimension_check(d, m, n, 4)
        assert report.ok, report.first_mismatch
        assert report.terms_checked == 5

    @pytest.mark.integration
    @pytest.mark.fast
    def test_graded_dimension_rejects_bad_parameters(self):
        """Test d must be positive."""
        with pytest.raises(IdentityParameterError):
            graded_dimension_check(0, 1, 1, 2)

    @pytest.mark.integration
    @pytest.mark.fast
    def test_full_selftest_schedules_every_suite(self):
        """Test the full grid adds the harmonic, span rank, peeling and product suites."""
        labels = [label for label, _ in _checks(quick=False)]
        assert 'harmonic highest weight vectors' in labels
        assert 'span rank of tableau vectors' in labels
        assert sum(label.startswith('peeling') for label in labels) == len(compute_config.PEELING_GRID)
        assert (sum(label.startswith('tensor character') for label in labels)
                == len(compute_config.TENSOR_PRODUCT_GRID))
        stability = tensor_stability_cases(compute_config.TENSOR_STABILITY_MAX_SIZE)
        assert sum(label.startswith('tensor stability') for label in labels) == len(stability)
        quick = [label for label, _ in _checks(quick=True)]
        assert not any(label.startswith('peeling') for label in quick)

    @pytest.mark.integration
    @pytest.mark.slow
    def test_quick_selftest(self):
        """Test every quick selftest check passes."""
        reports = run_selftest(quick=True, progress=False)
        failed = [report.to_json() for report in reports if not report.ok]
        assert not failed
