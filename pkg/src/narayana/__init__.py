"""Narayana-Paths: Dyck paths counted by returns and peaks, checked four independent ways."""

__version__ = "0.1.0"
