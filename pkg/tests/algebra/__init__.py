"""Tests of foliate.algebra."""
