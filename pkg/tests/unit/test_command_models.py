"""
Unit tests for the CLI request models.
"""

import sys
from pathlib import Path

import pytest
from pydantic import ValidationError

# Add parent directory to path
sys.path.insert(0, str(Path(__file__).parent.parent.parent))

from src.core.combinatorics import Partition
from src.core.errors import PartitionConstraintError
from src.data import compute_config
from src.ui.command_models import (
    REQUEST_MODELS,
    CharacterRequest,
    TensorRequest,
    build_request,
)


class TestBuildRequest:
    """Test suite for request validation."""

    @pytest.mark.unit
    @pytest.mark.fast
    def test_every_command_has_a_model(self):
        """Test the dispatch table covers the subcommands."""
        assert set(REQUEST_MODELS) == {'hookschur', 'character', 'trivial-character', 'verify',
                                       'tensor', 'wgroup', 'hwv-check', 'selftest'}

    @pytest.mark.unit
    @pytest.mark.fast
    def test_partition_is_parsed(self):
        """Test bracketed partitions become Partition objects."""
        request = build_request('character', {'kind': 'spo', 'lam': '[2,1]', 'd': 3, 'm': 1, 'n': 1,
                                              'degree': 4, 'format': 'text'})
        assert isinstance(request, CharacterRequest)
        assert request.lam == Partition((2, 1))
        assert request.format == 'text'

    @pytest.mark.unit
    @pytest.mark.fast
    def test_unknown_and_none_fields_are_dropped(self):
        """Test argparse extras and unset options are ignored."""
        request = build_request('tensor', {'kind': 'osp', 'mu': '[1]', 'gamma': [1], 'd': 2, 'r': 2,
                                           'm': 1, 'n': 1, 'rank': None, 'verbose': True,
                                           'command': 'tensor'})
        assert isinstance(request, TensorRequest)
        assert request.rank is None
        assert request.gamma == Partition((1,))

    @pytest.mark.unit
    @pytest.mark.fast
    def test_default_degree(self):
        """Test the configured default truncation degree."""
        request = build_request('trivial-character', {'group': 'O', 'd': 1, 'm': 1, 'n': 1})
        assert request.degree == compute_config.DEFAULT_DEGREE

    @pytest.mark.unit
    @pytest.mark.fast
    @pytest.mark.parametrize("command,fields", [
        ('character', {'kind': 'gl', 'lam': '[1]', 'd': 1, 'm': 1, 'n': 1}),
        ('character', {'kind': 'spo', 'lam': '[1]', 'd': 0, 'm': 1, 'n': 1}),
        ('character', {'kind': 'spo', 'lam': '[1]', 'd': 1, 'm': 1, 'n': 1, 'degree': 99}),
        ('hwv-check', {'lam': '[1]', 'd': 1, 'm': 1, 'n': 1, 'group': 'GL'}),
        ('selftest', {'format': 'yaml'}),
    ])
    def test_constraint_violations(self, command, fields):
        """Test field constraints raise ValidationError."""
        with pytest.raises(ValidationError):
            build_request(command, fields)

    @pytest.mark.unit
    @pytest.mark.fast
    def test_malformed_partition(self):
        """Test a malformed partition is refused."""
        with pytest.raises((ValidationError, PartitionConstraintError)):
            build_request('hookschur', {'lam': '[1,2]', 'm': 1, 'n': 1})

    @pytest.mark.unit
    @pytest.mark.fast
    def test_unknown_command(self):
        """Test an unknown subcommand."""
        with pytest.raises(KeyError):
            build_request('plot', {})

    @pytest.mark.unit
    @pytest.mark.fast
    def test_requests_are_frozen(self):
        """Test requests cannot be mutated after validation."""
        request = build_request('selftest', {'quick': True})
        with pytest.raises(ValidationError):
            request.quick = False
