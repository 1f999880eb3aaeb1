"""stripcomb test suite."""
