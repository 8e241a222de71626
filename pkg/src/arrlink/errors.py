"""Shared exception base for the package.

Every failure mode that callers are expected to catch derives from
ArrlinkError; modules define their specific subclasses next to the code
that raises them.
"""

from __future__ import annotations


class ArrlinkError(Exception):
    """Base class for all errors raised by this package."""
