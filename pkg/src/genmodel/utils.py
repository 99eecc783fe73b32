"""Helpers for canonical text output."""


def lines(items):
    """Join rendered items one per line, with a trailing LF unless empty."""
    return ''.join(f'{item}\n' for item in items)
