"""Reference sequences from the OEIS and the generators that reproduce them."""

from .client import OeisClient, oeis_check, oeis_suite_check, parse_bfile, resolve_cache_dir
from .generators import GENERATORS, Generator, generator_for, normalize_anumber

__all__ = [
    "OeisClient",
    "oeis_check",
    "oeis_suite_check",
    "parse_bfile",
    "resolve_cache_dir",
    "GENERATORS",
    "Generator",
    "generator_for",
    "normalize_anumber",
]
