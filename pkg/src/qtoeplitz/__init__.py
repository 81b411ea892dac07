"""Quaternion Toeplitz matrices and the G_{p,q}[A] left algebras, in exact arithmetic."""

__version__ = "0.1.0"
