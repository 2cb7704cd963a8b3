from __future__ import annotations

from functools import lru_cache

import pytest

from drgkit.families import generate, parse_family
from drgkit.graph import Graph

from . import oracles


def as_graph(adj: list[list[int]]) -> Graph:
    return Graph.from_neighbor_sets([set(a) for a in adj])


@lru_cache(maxsize=None)
def family(text: str):
    return generate(parse_family(text))


@pytest.fixture
def petersen() -> Graph:
    return as_graph(oracles.petersen_adj())


@pytest.fixture
def k5() -> Graph:
    return as_graph(oracles.complete_adj(5))


@pytest.fixture
def c6() -> Graph:
    return as_graph(oracles.cycle_adj(6))


@pytest.fixture
def c5() -> Graph:
    return as_graph(oracles.cycle_adj(5))


# distance-regular fixtures without a zero eigenvalue
DRG_FAMILIES = [
    "hamming:3,2",
    "hamming:2,9",
    "hamming:3,4",
    "hamming:3,12",
    "triangular:25",
    "johnson:8,3",
    "latin:4",
    "lattice:5",
    "sts:13",
    "paley:13",
]


@lru_cache(maxsize=None)
def drg_fixtures() -> dict:
    out = {
        "petersen": as_graph(oracles.petersen_adj()),
        "C6": as_graph(oracles.cycle_adj(6)),
        "K5": as_graph(oracles.complete_adj(5)),
    }
    for spec in DRG_FAMILIES:
        out[spec] = family(spec).graph
    return out


@lru_cache(maxsize=None)
def drg_arrays() -> dict:
    from drgkit.graph import intersection_array

    return {name: intersection_array(g) for name, g in drg_fixtures().items()}
