"""hochq - Exact Hochschild cohomology of quantum symmetric algebras and skew group extensions."""

__version__ = "0.1.0"
