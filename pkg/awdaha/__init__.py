"""Exact-arithmetic toolkit for Askey-Wilson algebra and universal DAHA modules."""

__version__ = "0.1.0"
