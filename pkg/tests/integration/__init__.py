"""Integration tests __init__."""
