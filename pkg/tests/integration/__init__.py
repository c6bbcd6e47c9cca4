#!/usr/bin/env python3
"""
SUPERCHAR - Integration Tests
Identity suites, tensor products and the command-line interface end to end
"""
