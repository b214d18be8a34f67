"""Shared failure type for tripped internal consistency checks."""


class InternalCheckError(RuntimeError):
    """A computed result violated a structural law the code relies on."""
