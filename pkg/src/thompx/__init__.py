"""
ThompX: Thompson-Higman groups, circuits and distortion

Prefix-code tables for elements of the Thompson-Higman monoids, compilers
between boolean circuits and generator words, and desk-scale measurement of
word-length asymmetry and distortion.
"""

__version__ = "0.1.0"
