"""stripcomb - exact counting of lattice paths in strips."""

__version__ = "0.3.0"
