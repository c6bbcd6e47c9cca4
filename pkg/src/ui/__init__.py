#!/usr/bin/env python3
"""
SUPERCHAR - UI Module
Request models for the command-line interface
"""

from .command_models import REQUEST_MODELS, CommandRequest, build_request

__all__ = ['REQUEST_MODELS', 'CommandRequest', 'build_request']
__version__ = '1.0.0'
