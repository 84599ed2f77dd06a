"""Tests of foliate.transverse."""
