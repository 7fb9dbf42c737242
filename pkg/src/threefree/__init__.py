"""Geodesics and the word problem for 3-free Artin groups."""

from .presentation import Presentation, PresentationError, fixture, load_presentation, parse_presentation
from .reducer import equal, geodesic_closure, is_geodesic, reduce, reduce_word
from .words import format_word, parse_word

__all__ = [
    "Presentation",
    "PresentationError",
    "equal",
    "fixture",
    "format_word",
    "geodesic_closure",
    "is_geodesic",
    "load_presentation",
    "parse_presentation",
    "parse_word",
    "reduce",
    "reduce_word",
]
