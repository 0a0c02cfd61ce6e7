"""Maximal real MUBs from Kerdock-like codes and the derived spherical configurations."""
