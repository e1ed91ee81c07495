import json
import os
import sys
from pathlib import Path

import pytest

# Add parent directory to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from src.geometry import Point
from src.plane_partitions import Box3, PlanePartition
from src.web_builder import web_from_plane_partition

GOLDEN_DIR = Path(__file__).parent / "golden"


def load_golden(name: str):
    with open(GOLDEN_DIR / name, "r", encoding="utf-8") as f:
        return json.load(f)


@pytest.fixture(scope="session")
def single_box():
    return load_golden("single_box.json")


@pytest.fixture
def single_cube_web():
    """Web of the one-cube partition in the unit box."""
    return web_from_plane_partition(PlanePartition(Box3(1, 1, 1), ((1,),)))


@pytest.fixture
def empty_cube_web():
    return web_from_plane_partition(PlanePartition(Box3(1, 1, 1), ((0,),)))


@pytest.fixture
def unit_box_edges(single_box, single_cube_web):
    """Edge ids of the one-cube web, keyed by the names in single_box.json."""
    ids = {}
    for name, (black, white) in single_box["edges"].items():
        u = single_cube_web.vertex_at(Point(*black))
        v = single_cube_web.vertex_at(Point(*white))
        ids[name] = single_cube_web.embedding[u.id][v.id]["edge"]
    return ids
