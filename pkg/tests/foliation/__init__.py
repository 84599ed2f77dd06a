"""Tests of foliate.foliation."""
