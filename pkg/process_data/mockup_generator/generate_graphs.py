"""Generate the mockup triple files."""

import sys
from pathlib import Path

import numpy as np
import pandas as pd

# Add current directory and src to path for imports
sys.path.insert(0, str(Path(__file__).parent))
sys.path.insert(0, str(Path(__file__).parent.parent.parent / "src"))
from config import (  # noqa: E402
    BULK_NODES, BULK_RELATIONS, BULK_SEED, BULK_TRIPLES,
    DISTRACTOR_PAIRS, FILLERS, FIXTURE_DIR, MARRIED_PAIRS, OUTPUT_DIR,
    RANDOM_EDGES, RANDOM_NODES, RANDOM_RELATIONS, RANDOM_SEED,
)
from synthetic import (  # noqa: E402
    TRIPLE_COLUMNS, bulk_triples, planted_coparent_graph, random_graph, write_triples,
)


def read_fixture(path: Path) -> pd.DataFrame:
    """Read a checked-in triple file, keeping every field as text."""
    return pd.read_csv(path, sep="\t", header=None, names=TRIPLE_COLUMNS,
                       comment="#", dtype=str, encoding="utf-8")


def generate_planted_graph() -> pd.DataFrame:
    """Generate planted_coparents.tsv."""
    print("Generating planted_coparents.tsv...")
    df = planted_coparent_graph(MARRIED_PAIRS, DISTRACTOR_PAIRS, FILLERS)
    filepath = write_triples(df, OUTPUT_DIR / "planted_coparents.tsv")
    print(f"✓ Saved {filepath}")
    return df


def generate_demo_graph() -> pd.DataFrame:
    """Generate graph.tsv: every worked-example fixture followed by the planted graph."""
    print("Generating graph.tsv...")
    parts = [read_fixture(path) for path in sorted(FIXTURE_DIR.glob("*.tsv"))]
    parts.append(planted_coparent_graph(MARRIED_PAIRS, DISTRACTOR_PAIRS, FILLERS))
    df = pd.concat(parts, ignore_index=True).drop_duplicates()
    filepath = write_triples(df, OUTPUT_DIR / "graph.tsv")
    print(f"✓ Saved {filepath} ({len(df)} triples)")
    return df


def generate_random_graph() -> pd.DataFrame:
    """Generate random_graph.tsv."""
    print("Generating random_graph.tsv...")
    rng = np.random.default_rng(RANDOM_SEED)
    df = random_graph(rng, RANDOM_NODES, RANDOM_RELATIONS, RANDOM_EDGES)
    filepath = write_triples(df, OUTPUT_DIR / "random_graph.tsv")
    print(f"✓ Saved {filepath} ({len(df)} triples)")
    return df


def generate_bulk_graph() -> pd.DataFrame:
    """Generate bulk_triples.tsv."""
    print(f"Generating bulk_triples.tsv with {BULK_TRIPLES:,} triples...")
    rng = np.random.default_rng(BULK_SEED)
    df = bulk_triples(rng, BULK_TRIPLES, BULK_NODES, BULK_RELATIONS)
    filepath = write_triples(df, OUTPUT_DIR / "bulk_triples.tsv")
    print(f"✓ Saved {filepath}")
    return df


if __name__ == "__main__":
    generate_demo_graph()
