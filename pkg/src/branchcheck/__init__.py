"""Irreducibility of plane curve branches from Newton diagrams of discriminants."""

from .exactpoly import Polynomial
from .parser import ParseError, parse_polynomial

__version__ = "0.1.0"

__all__ = ["Polynomial", "ParseError", "parse_polynomial"]
