"""Shared corpora: built once per session, used by unit and acceptance tests."""

from __future__ import annotations

import pytest

import walkparadox as wp

ER_SIZES = (40, 45, 50)
ER_P = 0.1
ER_TRIALS = 500
REGULAR_PARAMS = ((20, 3), (24, 4), (30, 3), (16, 4))
REGULAR_TRIALS = 100
DIRECTED_SIZES = (20, 30)
DIRECTED_TRIALS = 500


def build_er_corpus():
    out = []
    for trial in range(ER_TRIALS):
        spec = wp.FamilySpec(
            "erdos_renyi",
            n=ER_SIZES[trial % len(ER_SIZES)],
            p=ER_P,
            seed=wp.derive_seed(1, trial),
        )
        g, _ = wp.make_connected(spec)
        out.append(g)
    return out


def build_regular_corpus():
    out = []
    for trial in range(REGULAR_TRIALS):
        n, k = REGULAR_PARAMS[trial % len(REGULAR_PARAMS)]
        out.append(wp.k_regular_random(n, k, seed=wp.derive_seed(2, trial)))
    return out


def build_directed_corpus():
    out = []
    for trial in range(DIRECTED_TRIALS):
        n = DIRECTED_SIZES[trial % len(DIRECTED_SIZES)]
        out.append(wp.erdos_renyi_directed(n, ER_P, seed=wp.derive_seed(5, trial)))
    return out


@pytest.fixture(scope="session")
def exhaustive6():
    return list(wp.enumerate_connected(6))


@pytest.fixture(scope="session")
def er_corpus():
    return build_er_corpus()


@pytest.fixture(scope="session")
def regular_corpus():
    return build_regular_corpus()


@pytest.fixture(scope="session")
def directed_corpus():
    return build_directed_corpus()
