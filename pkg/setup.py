"""Setup script for Narayana-Paths (legacy support)."""

from setuptools import setup

setup()
