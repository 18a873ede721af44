"""Graph-pattern association rules: parsing, confidence, inference and mining."""
