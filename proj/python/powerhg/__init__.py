"""Exact domination, matching and transversal numbers for graphs and
generalized power hypergraphs, with family checks and theorem audits."""

import os
from pathlib import Path

from ._core import *  # noqa: F401,F403
from ._core import load_catalog_file

__version__ = "0.1.0"


def default_catalog_path():
    """Path of the packaged nine-graph catalog, honoring $POWERHG_CATALOG."""
    env = os.environ.get("POWERHG_CATALOG")
    if env:
        return Path(env)
    return Path(__file__).parent / "data" / "g_ge2_catalog.tsv"


def load_default_catalog():
    return load_catalog_file(str(default_catalog_path()))
