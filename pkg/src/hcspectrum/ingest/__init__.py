"""Parsing of user-supplied Casimir expressions."""
