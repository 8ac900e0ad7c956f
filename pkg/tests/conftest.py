import random
from functools import lru_cache
from itertools import permutations

import pytest

from ordinalmotifs.engine.context import FormalContext
from ordinalmotifs.engine.scale import ScaleFamily, build_scale


def random_context(rng, max_objects=6, max_attributes=6):
    n_objects = rng.randint(1, max_objects)
    n_attributes = rng.randint(1, max_attributes)
    density = rng.uniform(0.3, 0.7)
    rows = [[rng.random() < density for _ in range(n_attributes)] for _ in range(n_objects)]
    return FormalContext(["g%d" % g for g in range(n_objects)], ["m%d" % m for m in range(n_attributes)], rows)


def brute_extents(context):
    """Intersection closure of the attribute extents, as frozensets."""
    n = len(context.objects)
    extents = {frozenset(range(n))}
    for m in range(len(context.attributes)):
        column = frozenset(g for g in range(n) if context.incidence[g, m])
        extents |= {extent & column for extent in extents}
    return extents


@lru_cache(maxsize=None)
def brute_scale_extents(family, n):
    return frozenset(brute_extents(build_scale(family, n)))


def brute_is_motif(extents, domain, family):
    """Try every bijection from the domain onto the scale objects."""
    domain = frozenset(domain)
    local = {extent & domain for extent in extents}
    scale_extents = brute_scale_extents(family, len(domain))
    if len(local) != len(scale_extents):
        return False
    for order in permutations(sorted(domain)):
        if {frozenset(order[i] for i in extent) for extent in scale_extents} == local:
            return True
    return False


def bits(indices):
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


def random_corpus(seed, size, max_objects=6, max_attributes=6):
    rng = random.Random(seed)
    return [random_context(rng, max_objects, max_attributes) for _ in range(size)]


def clarified_corpus(seed, size, max_objects=6, max_attributes=6):
    return [context.clarify_objects()[0] for context in random_corpus(seed, size, max_objects, max_attributes)]


@pytest.fixture
def oracle():
    class Oracle:
        extents = staticmethod(brute_extents)
        is_motif = staticmethod(brute_is_motif)
        corpus = staticmethod(clarified_corpus)
        raw_corpus = staticmethod(random_corpus)
        mask = staticmethod(bits)
    return Oracle


@pytest.fixture
def nominal3():
    return build_scale(ScaleFamily.NOMINAL, 3)


@pytest.fixture
def boolean3():
    return build_scale(ScaleFamily.CONTRANOMINAL, 3)


@pytest.fixture
def interordinal3():
    return build_scale(ScaleFamily.INTERORDINAL, 3)


@pytest.fixture
def crown3():
    return build_scale(ScaleFamily.CROWN, 3)


@pytest.fixture
def chain5():
    return build_scale(ScaleFamily.ORDINAL, 5)
