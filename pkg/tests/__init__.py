"""foliate unit tests."""
