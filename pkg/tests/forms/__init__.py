"""Tests of foliate.forms."""
