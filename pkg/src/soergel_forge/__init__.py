"""Exact symbolic machinery for type-A Bott-Samelson bimodules: expression
graphs, diagram generators realized as matrices over a polynomial ring, the
parabolic projector family, and the verification suites that certify the
calculus identities."""

__version__ = "0.1.0"

SCHEMA = "soergel-forge/1"
