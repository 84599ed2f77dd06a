"""Tests of foliate.io."""
