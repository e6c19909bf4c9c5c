import functools
from pathlib import Path

import pytest

from ncalg.ainf import merkulov_model
from ncalg.classify12221 import catalog
from ncalg.rewrite import complete

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

REGULAR = {"A2": ("A", {"p": 2}), "B1": ("B", {"p": 1}), "C1": ("C", {"p": 1}), "D32": ("D", {"v": 3, "p": 2})}


@functools.lru_cache(maxsize=None)
def completed(name, bound):
    key, params = REGULAR[name]
    return complete(catalog(key, params), bound)


@functools.lru_cache(maxsize=None)
def model(name, policy="structured"):
    E, _ = merkulov_model(completed(name, 8), 4, 7, policy)
    return E


@pytest.fixture
def fixtures_dir():
    return FIXTURES
