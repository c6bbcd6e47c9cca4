"""
Unit tests for Enright sums, truncated hook Schur sums and super characters.

Expected series are worked out by hand from the oscillator products in one
even and one odd variable.
"""

import sys
from pathlib import Path

import pytest

# Add parent directory to path
sys.path.insert(0, str(Path(__file__).parent.parent.parent))

from src.core.combinatorics import Partition
from src.core.errors import PartitionConstraintError
from src.core.series import SeriesLayout
from src.core.super_characters import (
    classical_unitary_character,
    enright_schur_sum,
    hs_series,
    invariants_character,
    module_series,
    osp_character,
    spo_character,
    trivial_character,
    trivial_hs,
    trivial_shape,
    truncation_rank,
)
from src.core.wgroups import DualPair


# ============================================================================
# Tests for classical characters (n = 0)
# ============================================================================

class TestClassicalUnitary:
    """Test suite for the sp(2m) and so(2m) unitary characters."""

    @pytest.mark.unit
    @pytest.mark.fast
    def test_enright_sum_for_o1(self):
        """Test s_() - s_(2,2) at rank 2."""
        expansion = enright_schur_sum(Partition(), 1, 2, DualPair.O_SP)
        assert expansion.terms == {Partition(): 1, Partition((2, 2)): -1}

    @pytest.mark.unit
    @pytest.mark.fast
    def test_oscillator_even_part(self):
        """Test the even part 1/(1 - y^2) of the sp(2) oscillator."""
        result = classical_unitary_character(Partition(), 1, 1, DualPair.O_SP, 4)
        assert result.series.terms == {(0,): 1, (2,): 1, (4,): 1}
        assert result.kind == 'sp'

    @pytest.mark.unit
    @pytest.mark.fast
    def test_oscillator_odd_part(self):
        """Test the odd part y/(1 - y^2) of the sp(2) oscillator."""
        result = classical_unitary_character(Partition((1,)), 1, 1, DualPair.O_SP, 5)
        assert result.series.terms == {(1,): 1, (3,): 1, (5,): 1}

    @pytest.mark.unit
    @pytest.mark.fast
    def test_rank_zero(self):
        """Test the m = 0 character is 1."""
        result = classical_unitary_character(Partition(), 2, 0, DualPair.SP_SO, 3)
        assert result.series.terms == {(): 1}

    @pytest.mark.unit
    @pytest.mark.fast
    def test_too_many_rows(self):
        """Test l(lam) <= m is required."""
        with pytest.raises(PartitionConstraintError):
            classical_unitary_character(Partition((1, 1)), 3, 1, DualPair.O_SP, 3)


# ============================================================================
# Tests for hook Schur sums
# ============================================================================

class TestHookSchurSums:
    """Test suite for the truncated hook Schur sums."""

    @pytest.mark.unit
    @pytest.mark.fast
    @pytest.mark.parametrize("rows,d,cap,pair,rank", [
        ((), 1, 4, DualPair.O_SP, 3),
        ((), 2, 4, DualPair.O_SP, 4),
        ((1, 1), 2, 4, DualPair.O_SP, 4),
        ((), 2, 4, DualPair.SP_SO, 5),
        ((2,), 2, 4, DualPair.SP_SO, 4),
        ((1,), 2, 3, DualPair.SP_SO, 4),
    ])
    def test_truncation_rank(self, rows, d, cap, pair, rank):
        """Test the smallest rank whose congruence degree exceeds the cap."""
        assert truncation_rank(Partition(rows), d, cap, pair) == rank

    @pytest.mark.unit
    @pytest.mark.fast
    def test_trivial_o1_sum_is_one_below_hook(self):
        """Test that (2,2) is outside the (1|1)-hook and drops."""
        hs = hs_series(Partition(), 1, 1, 1, 4, DualPair.O_SP)
        assert hs.expansion.terms == {Partition(): 1}
        assert hs.rank_used == 3

    @pytest.mark.unit
    @pytest.mark.fast
    def test_trivial_o1_sum_in_two_variables(self):
        """Test 1 - HS_(2,2) in the (2|0)-hook."""
        hs = hs_series(Partition(), 1, 2, 0, 4, DualPair.O_SP)
        assert hs.expansion.terms == {Partition(): 1, Partition((2, 2)): -1}

    @pytest.mark.unit
    @pytest.mark.fast
    def test_rank_below_truncation_rank(self):
        """Test that too small an explicit rank is refused."""
        with pytest.raises(PartitionConstraintError):
            hs_series(Partition(), 1, 1, 1, 4, DualPair.O_SP, rank=2)

    @pytest.mark.unit
    @pytest.mark.fast
    def test_larger_rank_gives_same_series(self):
        """Test the truncated sum does not depend on a larger rank."""
        base = hs_series(Partition((1,)), 1, 2, 1, 5, DualPair.O_SP)
        wider = hs_series(Partition((1,)), 1, 2, 1, 5, DualPair.O_SP, rank=base.rank_used + 2)
        assert base.series == wider.series

    @pytest.mark.unit
    @pytest.mark.fast
    def test_sp_pair_keeps_three_box_column(self):
        """Test Sp(2) label (1) at degree 3 keeps -HS_(1,1,1) and is rank stable."""
        lam = Partition((1,))
        base = hs_series(lam, 2, 1, 1, 3, DualPair.SP_SO)
        assert base.rank_used == 4
        assert base.expansion.terms.get(Partition((1, 1, 1))) == -1
        wider = hs_series(lam, 2, 1, 1, 3, DualPair.SP_SO, rank=base.rank_used + 2)
        assert base.series == wider.series


# ============================================================================
# Tests for super characters
# ============================================================================

class TestSuperCharacters:
    """Test suite for spo and osp characters."""

    @pytest.mark.unit
    @pytest.mark.fast
    def test_spo_trivial_o1(self):
        """Test the even part of 1/(1 - eps y) * (1 + eps z) up to degree 4."""
        result = spo_character(Partition(), 1, 1, 1, 4)
        assert result.series.terms == {(0, 0): 1, (2, 0): 1, (4, 0): 1, (1, 1): 1, (3, 1): 1}
        assert not result.combined_pair
        assert result.to_json()['prefactor'] == {'y': '1/2', 'z': '-1/2'}

    @pytest.mark.unit
    @pytest.mark.fast
    def test_spo_without_odd_variables_is_classical(self):
        """Test n = 0 reduces to the sp(2m) character."""
        result = spo_character(Partition(), 1, 1, 0, 4)
        classical = classical_unitary_character(Partition(), 1, 1, DualPair.O_SP, 4,
                                                SeriesLayout(y=1, z=0))
        assert result.series == classical.series

    @pytest.mark.unit
    @pytest.mark.fast
    def test_spo_even_d_combines_bar_partner(self):
        """Test O(2): the trivial and determinant modules are summed."""
        result = spo_character(Partition(), 2, 1, 0, 4)
        assert result.combined_pair
        assert result.series.terms == {(0,): 1, (2,): 1, (4,): 1}

    @pytest.mark.unit
    @pytest.mark.fast
    def test_spo_even_d_self_paired(self):
        """Test O(2) label (1) equals its bar partition."""
        result = spo_character(Partition((1,)), 2, 1, 0, 4)
        assert not result.combined_pair
        assert result.series.terms == {(1,): 1, (3,): 1}

    @pytest.mark.unit
    @pytest.mark.fast
    @pytest.mark.parametrize("rows,expected", [
        ((), {(0,): 1}),
        ((2,), {(2,): 1}),
    ])
    def test_osp_sp2_with_one_even_variable(self, rows, expected):
        """Test Sp(2) labels (N) pair with the so(2) weight y^N."""
        assert osp_character(Partition(rows), 2, 1, 0, 4).series.terms == expected

    @pytest.mark.unit
    @pytest.mark.fast
    def test_outside_hook_rejected(self):
        """Test lam must lie in the (m|n)-hook."""
        with pytest.raises(PartitionConstraintError):
            spo_character(Partition((2, 2)), 5, 1, 1, 4)

    @pytest.mark.unit
    @pytest.mark.fast
    def test_osp_needs_even_d(self):
        """Test the Sp pair refuses odd d."""
        with pytest.raises(PartitionConstraintError):
            osp_character(Partition(), 3, 1, 1, 4)

    @pytest.mark.unit
    @pytest.mark.fast
    def test_module_series_matches_character_when_self_paired(self):
        """Test module_series equals spo_character for odd d."""
        lam = Partition((1,))
        assert module_series(lam, 1, 1, 1, 4, DualPair.O_SP) == spo_character(lam, 1, 1, 1, 4).series


# ============================================================================
# Tests for the trivial module and invariants
# ============================================================================

class TestTrivialAndInvariants:
    """Test suite for closed forms of the trivial module and invariant algebras."""

    @pytest.mark.unit
    @pytest.mark.fast
    def test_trivial_shape(self):
        """Test the shape of the index pair (1, 2) for d = 1."""
        assert trivial_shape(DualPair.O_SP, 1, (1, 2)) == Partition((2, 2))
        assert trivial_shape(DualPair.O_SP, 1, ()) == Partition()

    @pytest.mark.unit
    @pytest.mark.fast
    def test_trivial_hs_matches_enright_sum(self):
        """Test the closed form against the coset sum for O(1)."""
        closed = trivial_hs(DualPair.O_SP, 1, 2, 0, 4)
        assert closed.expansion.terms == {Partition(): 1, Partition((2, 2)): -1}

    @pytest.mark.unit
    @pytest.mark.fast
    def test_trivial_character_matches_spo(self):
        """Test trivial_character against spo_character of ()."""
        assert trivial_character(DualPair.O_SP, 1, 1, 1, 4).series == spo_character(Partition(), 1, 1, 1, 4).series

    @pytest.mark.unit
    @pytest.mark.fast
    def test_o_invariants(self):
        """Test O(1) invariants: 1 + HS_(2) up to degree 2."""
        series = invariants_character('O', 1, 1, 1, 2)
        assert series.terms == {(0, 0): 1, (2, 0): 1, (1, 1): 1}

    @pytest.mark.unit
    @pytest.mark.fast
    def test_sp_invariants(self):
        """Test Sp(2) invariants with one even variable are constants."""
        assert invariants_character('Sp', 2, 1, 0, 4).terms == {(0,): 1}

    @pytest.mark.unit
    @pytest.mark.fast
    def test_unknown_group(self):
        """Test an unknown invariants group."""
        with pytest.raises(PartitionConstraintError):
            invariants_character('GL', 1, 1, 1, 2)
