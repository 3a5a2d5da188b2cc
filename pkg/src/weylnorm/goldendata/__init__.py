"""Transcribed reference tables (CSV)."""
