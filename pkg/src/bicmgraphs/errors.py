"""Exception types shared across the package.

The CLI maps these onto distinct exit codes, so keep the hierarchy flat.
"""


class InputError(ValueError):
    """Malformed user input: bad file, bad graph data, bad arguments."""


class SizeGuardError(ValueError):
    """An operation was asked to exceed its documented size limit."""


class ConsistencyError(RuntimeError):
    """An internal cross-check that is backed by a theorem failed."""
