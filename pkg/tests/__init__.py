"""Tests for hochq."""
