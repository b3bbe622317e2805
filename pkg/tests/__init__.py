"""
eqos test suite.

One module per package module. Corpus-wide and Salvetti cross-validation
suites are marked `slow`.
"""
