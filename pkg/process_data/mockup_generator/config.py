"""Configuration for mockup graph generation."""

from pathlib import Path

# Output directory for mockup data
OUTPUT_DIR = Path(__file__).parent.parent.parent / "data" / "mockup"

# Worked-example graphs merged into the demo graph
FIXTURE_DIR = Path(__file__).parent.parent.parent / "data" / "fixtures"

# Planted co-parent graph: married pairs, unmarried distractor pairs, filler nodes
MARRIED_PAIRS = 10
DISTRACTOR_PAIRS = 5
FILLERS = 5

# Random graph for mining experiments
RANDOM_SEED = 7
RANDOM_NODES = 30
RANDOM_RELATIONS = 4
RANDOM_EDGES = 80

# Bulk graph for load benchmarks
BULK_SEED = 11
BULK_TRIPLES = 100_000
BULK_NODES = 20_000
BULK_RELATIONS = 20
