"""cyclocode - cyclotomic trace codes, weight distributions and generalized Hamming weights."""

try:
    from cyclocode._version import version as __version__
except ImportError:
    __version__ = "0.1.0"
