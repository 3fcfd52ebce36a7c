"""
cotype-bench: exact verification of smoothing and approximation schemes for
metric cotype on discrete tori Z_m^n.
"""

__version__ = "0.1.0"
