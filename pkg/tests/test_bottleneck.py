import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from heatgraph import ExtendedDiagramSet, PersistenceDiagram, bottleneck_distance, diagram_set_distance
from oracles import brute_force_bottleneck

finite = st.floats(min_value=-5, max_value=5, allow_nan=False, allow_infinity=False)
point_lists = st.lists(st.tuples(finite, finite), min_size=0, max_size=5)


def random_diagram(rng, max_points=5):
    k = int(rng.integers(0, max_points + 1))
    return [(float(rng.uniform(-3, 3)), float(rng.uniform(-3, 3))) for _ in range(k)]


def test_identical_diagrams():
    d = [(0.0, 2.0), (1.0, 4.0)]
    assert bottleneck_distance(d, d) == 0.0
    assert bottleneck_distance([], []) == 0.0


def test_single_point_against_empty():
    assert bottleneck_distance([(0.0, 2.0)], []) == 1.0


def test_direct_match_beats_double_projection():
    assert bottleneck_distance([(0.0, 2.0)], [(0.0, 3.0)]) == 1.0


def test_matches_brute_force_exactly():
    rng = np.random.default_rng(13)
    for _ in range(150):
        mu, nu = random_diagram(rng), random_diagram(rng)
        assert bottleneck_distance(mu, nu) == brute_force_bottleneck(mu, nu)


@settings(max_examples=150, deadline=None)
@given(point_lists, point_lists)
def test_brute_force_property(mu, nu):
    assert bottleneck_distance(mu, nu) == brute_force_bottleneck(mu, nu)


@settings(max_examples=100, deadline=None)
@given(point_lists, point_lists)
def test_reflection_isometry(mu, nu):
    swapped_mu = [(d, b) for b, d in mu]
    swapped_nu = [(d, b) for b, d in nu]
    assert bottleneck_distance(mu, nu) == bottleneck_distance(swapped_mu, swapped_nu)


@settings(max_examples=100, deadline=None)
@given(point_lists, point_lists, st.lists(finite, min_size=1, max_size=4))
def test_diagonal_point_insensitivity(mu, nu, levels):
    base = bottleneck_distance(mu, nu)
    padded_mu = mu + [(x, x) for x in levels]
    padded_nu = nu + [(x, x) for x in levels[:2]]
    assert bottleneck_distance(padded_mu, nu) == base
    assert bottleneck_distance(mu, padded_nu) == base
    assert bottleneck_distance(padded_mu, padded_nu) == base


def test_symmetry():
    rng = np.random.default_rng(29)
    for _ in range(50):
        mu, nu = random_diagram(rng), random_diagram(rng)
        assert bottleneck_distance(mu, nu) == bottleneck_distance(nu, mu)


def _diagram_set(ord0=(), rel1=(), ext0=(), ext1=()):
    return ExtendedDiagramSet(
        ord0=PersistenceDiagram.from_points(ord0),
        rel1=PersistenceDiagram.from_points(rel1),
        ext0=PersistenceDiagram.from_points(ext0),
        ext1=PersistenceDiagram.from_points(ext1),
    )


def test_diagram_set_distance_examples():
    a = _diagram_set(ext0=[(0.0, 1.0)])
    assert diagram_set_distance(a, a) == 0.0
    assert diagram_set_distance(a, _diagram_set()) == 0.5
    b = _diagram_set(ext0=[(0.0, 1.0)], ext1=[(1.0, 0.0)])
    assert diagram_set_distance(b, a) == 0.5
