"""Scripts that write synthetic graphs into data/mockup/."""
