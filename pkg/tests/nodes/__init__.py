"""Tests for the verification nodes and workflow."""
