"""Exact classification of degree four foliations on projective space."""

from .__version__ import VERSION
