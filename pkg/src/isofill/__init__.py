"""isofill: fillings of combinatorial loops in flag complexes."""

__version__ = "0.1.0"
