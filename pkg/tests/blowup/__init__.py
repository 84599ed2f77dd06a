"""Tests of foliate.blowup."""
