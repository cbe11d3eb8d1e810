"""Stabiliser-state and Clifford-gate conversion and verification toolkit."""
