"""Knowledge graph question answering - Source modules."""
