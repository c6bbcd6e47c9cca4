"""
Tests package for Superchar.

This package contains unit tests and integration tests for the character
library, the verification suites and the command-line interface.
"""
