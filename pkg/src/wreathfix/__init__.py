"""Exact computation in the torus-fixed ring of wreath-product quotient
singularities, with independent Betti-number cross checks."""

__version__ = "0.1.0"
