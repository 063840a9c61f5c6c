import itertools
from pathlib import Path

import pytest
from hypothesis import strategies as st

from stringyhodge import HodgeDiamond, ResolutionDescriptor

CORPUS = Path(__file__).resolve().parent.parent / "corpus"


@pytest.fixture
def corpus():
    return CORPUS


def diag(*vals):
    """Diamond supported on the diagonal: diag(1, 2, 1) is h^{p,p} = 1, 2, 1."""
    return HodgeDiamond(len(vals) - 1, {(i, i): v for i, v in enumerate(vals)})


def _orbits(m):
    """Orbits of (p,q) under conjugation and Poincare duality in dimension m."""
    seen = set()
    out = []
    for p in range(m + 1):
        for q in range(m + 1):
            if (p, q) in seen:
                continue
            orbit = {(p, q), (q, p), (m - p, m - q), (m - q, m - p)}
            seen |= orbit
            out.append(sorted(orbit))
    return out


@st.composite
def pd_diamonds(draw, dim, connected=False):
    """Random diamond satisfying conjugation symmetry and Poincare duality."""
    components = 1 if connected else draw(st.integers(1, 3))
    h = {}
    for orbit in _orbits(dim):
        if (0, 0) in orbit:
            value = components
        else:
            value = draw(st.integers(0, 4))
        for key in orbit:
            h[key] = value
    return HodgeDiamond(dim, h)


def random_pd_diamond(rng, dim, connected=False):
    components = 1 if connected else rng.randint(1, 3)
    h = {}
    for orbit in _orbits(dim):
        value = components if (0, 0) in orbit else rng.randint(0, 4)
        for key in orbit:
            h[key] = value
    return HodgeDiamond(dim, h)


def random_descriptor(rng, min_discrepancy=0, max_dim=4, max_components=5):
    """Deterministic counterpart of the hypothesis strategy below."""
    n = rng.randint(2, max_dim)
    ncomp = rng.randint(0, max_components)
    ids = [f"D{i}" for i in range(ncomp)]
    discs = tuple((cid, rng.randint(min_discrepancy, 3)) for cid in ids)
    candidates = [
        J
        for size in range(1, min(n, ncomp) + 1)
        for J in itertools.combinations(ids, size)
    ]
    family = set()
    for J in rng.sample(candidates, min(len(candidates), rng.randint(0, 4))):
        for size in range(1, len(J) + 1):
            family.update(itertools.combinations(J, size))
    strata = {(): random_pd_diamond(rng, n, connected=True)}
    for J in sorted(family):
        strata[J] = random_pd_diamond(rng, n - len(J))
    d = ResolutionDescriptor(n=n, components=discs, strata=strata, label="random")
    assert not d.validate()
    return d


@st.composite
def descriptors(draw, min_discrepancy=0, max_dim=4, max_components=5):
    """Random valid resolution descriptor with PD-consistent strata."""
    n = draw(st.integers(2, max_dim))
    ncomp = draw(st.integers(0, max_components))
    ids = [f"D{i}" for i in range(ncomp)]
    discs = tuple(
        (cid, draw(st.integers(min_discrepancy, 3))) for cid in ids
    )
    candidates = [
        J
        for size in range(1, min(n, ncomp) + 1)
        for J in itertools.combinations(ids, size)
    ]
    maximal = (
        draw(st.lists(st.sampled_from(candidates), max_size=4, unique=True))
        if candidates
        else []
    )
    family = set()
    for J in maximal:
        for size in range(1, len(J) + 1):
            family.update(itertools.combinations(J, size))
    strata = {(): draw(pd_diamonds(n, connected=True))}
    for J in sorted(family):
        strata[J] = draw(pd_diamonds(n - len(J)))
    d = ResolutionDescriptor(n=n, components=discs, strata=strata, label="random")
    assert not d.validate()
    return d
