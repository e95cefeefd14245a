"""Bundled branch-arrangement data files."""
