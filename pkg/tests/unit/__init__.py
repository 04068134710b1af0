"""Unit tests __init__."""
