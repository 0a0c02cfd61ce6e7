"""Kerdock/Preparata codes over Z4, their association schemes, real MUB
configurations and the lattices attached to them, all in exact arithmetic."""

__version__ = "0.1.0"
