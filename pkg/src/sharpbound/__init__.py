"""Sharp upper bounds on spectral radii of nonnegative matrices and of the
six standard matrices of graphs and digraphs, with exact-radius oracles and
a property-testing harness."""

__version__ = "0.1.0"
