"""Exact linear algebra over Q and GF(2), and strict-inequality feasibility."""
