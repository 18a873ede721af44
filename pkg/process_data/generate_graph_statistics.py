"""
Generate relation_statistics.csv from a triple file.

This script summarizes every relation of the graph:
- Edge count
- Distinct subjects
- Distinct objects

Output: data/relation_statistics.csv
"""

import argparse
import sys
from pathlib import Path

import pandas as pd

script_dir = Path(__file__).parent
project_root = script_dir.parent
src_path = project_root / "src"
if str(src_path) not in sys.path:
    sys.path.insert(0, str(src_path))

from utils.data_loader import get_graph_stats, load_graph  # noqa: E402


def generate_graph_statistics(input_path: Path, output_dir: Path) -> pd.DataFrame:
    """
    Generate relation statistics from a triple file.

    Args:
        input_path: Path to a tab-separated triple file
        output_dir: Directory to save output CSV
    """
    print(f"Loading graph from {input_path}...")
    graph = load_graph(input_path)

    df = graph.relation_frequencies()

    output_dir.mkdir(parents=True, exist_ok=True)
    output_path = output_dir / "relation_statistics.csv"
    df.to_csv(output_path, index=False)

    stats = get_graph_stats(graph)
    print(f"\n✓ Generated relation_statistics.csv ({len(df)} relations)")
    print(f"  Saved to: {output_path}")
    print("\nGraph Summary:")
    print(f"  Nodes: {stats['total_nodes']:,}")
    print(f"  Edges: {stats['total_edges']:,}")
    print(f"  Properties: {stats['total_properties']:,}")
    if not df.empty:
        top = df.iloc[0]
        print(f"  Most frequent relation: {top['relation']} ({top['edges']:,} edges)")

    return df


def main():
    """Main entry point."""
    parser = argparse.ArgumentParser(description="Write per-relation statistics of a triple file")
    parser.add_argument("input", nargs="?", default=str(project_root / "data" / "graph.tsv"),
                        help="Triple file (default: data/graph.tsv)")
    parser.add_argument("--output-dir", default=str(project_root / "data"), help="Output directory")
    args = parser.parse_args()

    input_path = Path(args.input)
    if not input_path.exists():
        print(f"Error: Input file not found: {input_path}")
        return

    generate_graph_statistics(input_path, Path(args.output_dir))


if __name__ == '__main__':
    main()
