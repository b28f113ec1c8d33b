"""Exact-arithmetic toolkit for double affine Hecke algebra computations.

Subsystems: exact scalar domains (scalars), sparse Laurent polynomials
(laurent), the operator engine for the polynomial representations (ops),
relation catalogs and presentations (algebra), the commuting Macdonald
layer (macdonald), quasiinvariant spaces and Hilbert series (quasiinv),
multiplicative quiver varieties (quiver), bow varieties and the
Hanany-Witten transition (bow), and the batch CLI (cli).
"""

__version__ = "0.1.0"
