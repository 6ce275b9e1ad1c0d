"""Shared fixtures and random-instance helpers for the test suite."""

from __future__ import annotations

import random

import pytest

from fptlab import PolyRing


@pytest.fixture
def rng():
    return random.Random(20260810)


def random_poly(ring: PolyRing, rng: random.Random, max_terms: int = 4,
                max_exp: int = 6, in_max_ideal: bool = False):
    """A random nonzero polynomial with small support."""
    while True:
        terms = {}
        for _ in range(rng.randint(1, max_terms)):
            exps = tuple(rng.randint(0, max_exp) for _ in range(ring.n))
            if in_max_ideal and not any(exps):
                continue
            terms[exps] = rng.randint(1, ring.p - 1)
        f = ring.from_terms(terms)
        if not f.is_zero():
            return f


def ring_f2():
    return PolyRing(2, ("x", "y"))


def ring_f3():
    return PolyRing(3, ("x", "y"))


def ring_f7():
    return PolyRing(7, ("x", "y"))
