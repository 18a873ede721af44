"""Configuration settings for the knowledge-graph question answering engine."""

import os
from pathlib import Path
from typing import FrozenSet, Optional

# Repository layout
BASE_DIR = Path(__file__).parent.parent.parent
DATA_DIR = BASE_DIR / "data"
MOCKUP_DIR = DATA_DIR / "mockup"

# USE_MOCKUP predates DATA_MODE and is honored only when DATA_MODE is unset
USE_MOCKUP = os.getenv("USE_MOCKUP", "false").lower() == "true"

VALID_DATA_MODES = {"real", "mockup", "adaptive"}


def _data_mode_from_env() -> str:
    mode = os.getenv("DATA_MODE")
    if not mode:
        return "mockup" if USE_MOCKUP else "adaptive"
    mode = mode.lower()
    return mode if mode in VALID_DATA_MODES else "real"


# Where bare file names are looked up: "real", "mockup" or "adaptive"
DATA_MODE = _data_mode_from_env()

# Default input files (names are resolved through get_data_path)
GRAPH_FILE = os.getenv("KGQA_GRAPH_FILE", "graph.tsv")
TEMPLATES_FILE = os.getenv("KGQA_TEMPLATES_FILE", "templates.txt")
SENTENCES_FILE = os.getenv("KGQA_SENTENCES_FILE", "sentences.txt")
RULES_FILE = BASE_DIR / os.getenv("KGQA_RULES_FILE", "rules/ismarriedto.rules")

# Predicates whose objects become node properties instead of edges
DEFAULT_LITERAL_PREDICATES: FrozenSet[str] = frozenset({"diedOnDate", "wasBornOnDate"})


def _literal_predicates_from_env() -> FrozenSet[str]:
    raw = os.getenv("KGQA_LITERAL_PREDICATES")
    if raw is None:
        return DEFAULT_LITERAL_PREDICATES
    return frozenset(p.strip() for p in raw.split(",") if p.strip())


LITERAL_PREDICATES = _literal_predicates_from_env()

# Node label given to every entity (the graph has a single class)
DEFAULT_NODE_LABEL = "owl_Thing"


def _threshold_from_env(name: str, default: float) -> float:
    """Read a [0, 1] threshold from the environment, keeping the default on bad input."""
    raw = os.getenv(name)
    if raw is None:
        return default
    try:
        value = float(raw)
    except ValueError:
        return default
    if not 0.0 <= value <= 1.0:
        return default
    return value


# Confidence thresholds for rule-based answers
MIN_STD_CONF = _threshold_from_env("KGQA_MIN_STD_CONF", 0.5)
MIN_PCA_CONF = _threshold_from_env("KGQA_MIN_PCA_CONF", 0.5)

# Rule bodies hold between one and four antecedents
MAX_BODY_ATOMS = 4

LOG_LEVEL = os.getenv("KGQA_LOG_LEVEL", "WARNING").upper()


def get_data_path(filename: str, mode: Optional[str] = None) -> Path:
    """
    Path of a data file under ``mode`` (default: ``DATA_MODE``).

    ``real`` reads data/ and ``mockup`` reads data/mockup/. ``adaptive`` takes the
    first of the two holding the file, else the data/ path. Unknown modes read data/.
    """
    data_mode = (mode or DATA_MODE).lower()
    if data_mode == "mockup":
        return MOCKUP_DIR / filename
    if data_mode == "adaptive":
        for directory in (DATA_DIR, MOCKUP_DIR):
            if (directory / filename).exists():
                return directory / filename
    return DATA_DIR / filename
