"""Generate all mockup data files."""

import sys
from pathlib import Path

# Add current directory to path for imports
sys.path.insert(0, str(Path(__file__).parent))

from generate_graphs import (  # noqa: E402
    generate_bulk_graph,
    generate_demo_graph,
    generate_planted_graph,
    generate_random_graph,
)


def generate_all():
    """Generate all mockup data files."""
    print("=" * 60)
    print("Generating all mockup data files...")
    print("=" * 60)

    print("\n[Step 1/4] Generating demo graph...")
    generate_demo_graph()

    print("\n[Step 2/4] Generating planted co-parent graph...")
    generate_planted_graph()

    print("\n[Step 3/4] Generating random graph...")
    generate_random_graph()

    print("\n[Step 4/4] Generating bulk graph...")
    generate_bulk_graph()

    print("\n" + "=" * 60)
    print("✓ All mockup data files generated successfully!")
    print("=" * 60)
    print("\nFiles saved to: data/mockup/")
    print("\nTo use mockup data, set DATA_MODE=mockup in your environment:")
    print("  export DATA_MODE=mockup")
    print('  python app/cli.py ask "Who did Malekeh Jahan marry?" --use-rules')


if __name__ == "__main__":
    generate_all()
