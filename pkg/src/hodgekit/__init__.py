"""hodgekit: exact-arithmetic tools for K3-type rational Hodge
structures, their endomorphism fields and transcendental Hodge algebras,
and k-symplectic structure verification."""

__version__ = "0.1.0"
