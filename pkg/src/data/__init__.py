"""
SUPERCHAR - Data Layer Module
Provides compute configuration and result serialization
"""

from . import compute_config

from .serializers import ResultSerializer

__all__ = [
    'compute_config',
    'ResultSerializer'
]
