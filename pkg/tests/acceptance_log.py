"""Shared list of one-line acceptance verdicts, printed in the pytest summary."""

LINES: list[str] = []
