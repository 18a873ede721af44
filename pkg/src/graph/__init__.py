"""Property graph store and path-pattern matching."""
