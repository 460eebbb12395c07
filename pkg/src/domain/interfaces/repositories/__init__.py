"""Repositories interfaces."""
