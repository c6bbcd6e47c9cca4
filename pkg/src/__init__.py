"""
SUPERCHAR - Source Package

Characters of spo(2m|2n) and osp(2m|2n) modules dual to O(d) and Sp(d).
"""

__version__ = '1.0.0'
