"""Scan-kernel facade: compiled backend when built, pure Python otherwise."""

from __future__ import annotations

try:
    from ._scan_cy import thompson_agreement_scan

    BACKEND = "compiled"
except ImportError:
    from ._scan_py import thompson_agreement_scan

    BACKEND = "python"

__all__ = ["thompson_agreement_scan", "BACKEND"]
