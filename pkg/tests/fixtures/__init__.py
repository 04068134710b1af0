"""Fixtures package for ThompX tests."""
