import numpy as np
import pytest

import harmosc as H


@pytest.fixture(scope="session")
def pinned_quartic_spec():
    return H.DesignSpec(4, 2.0, (), {0: 1.0, 1: 0.5, 4: 1.0})


@pytest.fixture(scope="session")
def pinned_quartic(pinned_quartic_spec):
    return H.design(pinned_quartic_spec)


@pytest.fixture(scope="session")
def pinned_quartic_impulse(pinned_quartic):
    model = H.canonical_state_space(pinned_quartic)
    u, events = H.make_input(H.ImpulseTrain(((0.0, 1.0),)), 200.0, 0.01)
    return H.simulate(model, u, events)


@pytest.fixture(scope="session")
def clean_quartic_spec():
    return H.DesignSpec(4, 1.0, (5.0, 9.8), {0: 1.0})


@pytest.fixture(scope="session")
def clean_quartic(clean_quartic_spec):
    return H.design(clean_quartic_spec)


@pytest.fixture(scope="session")
def clean_quartic_impulse(clean_quartic):
    model = H.canonical_state_space(clean_quartic)
    u, events = H.make_input(H.ImpulseTrain(((0.0, 1.0),)), 200.0, 0.01)
    return H.simulate(model, u, events)


@pytest.fixture(scope="session")
def clean_quartic_step(clean_quartic):
    model = H.canonical_state_space(clean_quartic)
    u, events = H.make_input(H.StepProfile(((0.0, 1.0),)), 200.0, 0.01)
    return H.simulate(model, u, events)


def find_ridges(freqs, row, rel_threshold):
    """Indices of local maxima above rel_threshold * max(row)."""
    thr = rel_threshold * np.max(row)
    hits = []
    for k in range(1, row.size - 1):
        if row[k] > row[k - 1] and row[k] >= row[k + 1] and row[k] > thr:
            hits.append(k)
    return hits
