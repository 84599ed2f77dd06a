"""Tests of foliate.classifier."""
