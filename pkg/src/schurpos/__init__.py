"""Exact symmetric-polynomial toolkit: Kostka numbers, Schur bases and positivity."""
