import sys
from itertools import permutations
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from kauffman.corpus import bundled
from kauffman.diagram import from_slot_tuples, DiagramError


@pytest.fixture(scope="session")
def corpus_diagrams():
    """Name -> parsed diagram for every bundled entry."""
    return {e.name: e.diagram() for e in bundled()}


def _enumerate_small():
    """Every valid diagram on one or two crossings, deduplicated."""
    seen = {}
    for labels in set(permutations((1, 1, 2, 2))):
        try:
            d = from_slot_tuples([tuple(labels)])
        except DiagramError:
            continue
        seen.setdefault(tuple(x.slots for x in d.crossings), d)
    for labels in set(permutations((1, 1, 2, 2, 3, 3, 4, 4))):
        try:
            d = from_slot_tuples([tuple(labels[:4]), tuple(labels[4:])])
        except DiagramError:
            continue
        seen.setdefault(tuple(x.slots for x in d.crossings), d)
    return tuple(seen.values())


_SMALL_POOL = None


def small_pool():
    global _SMALL_POOL
    if _SMALL_POOL is None:
        _SMALL_POOL = _enumerate_small()
    return _SMALL_POOL


@pytest.fixture(scope="session")
def small_diagrams():
    """Exhaustive pool of valid one- and two-crossing diagrams."""
    return small_pool()
