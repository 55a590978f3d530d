"""Exact equivariant algebra: Burnside rings, Mackey and Tambara functors
for dihedral groups, multiplicative norms, Real Hochschild homology and
p-typical Real Witt vector towers."""

__version__ = "0.1.0"
