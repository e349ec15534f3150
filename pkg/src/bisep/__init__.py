"""bisep: exact deciders for properties of finite-dimensional ring
extensions and bimodules (separable, split, Frobenius, QF, H-separable,
centrally projective, biseparable), with verifiable witnesses."""

__version__ = "0.1.0"

from .fields import F2, F3, QQ, ExtField, PrimeField, Rationals  # noqa: F401
