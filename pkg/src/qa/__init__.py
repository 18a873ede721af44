"""Question classification, query planning and answering."""
