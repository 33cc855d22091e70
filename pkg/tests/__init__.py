"""Tests for hyperbounds."""
