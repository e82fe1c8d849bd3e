from fractions import Fraction

import hypothesis.strategies as st

from dtzero import ChernNumbers, PointConfig, SetPartition, TruncatedSeries, partitions


def rationals(bound=6, max_denominator=12):
    return st.fractions(min_value=-bound, max_value=bound, max_denominator=max_denominator)


@st.composite
def series(draw, order=None, constant=None, max_order=12):
    """Random exact series; pin the constant term with `constant`."""
    if order is None:
        order = draw(st.integers(min_value=2, max_value=max_order))
    coeffs = draw(st.lists(rationals(), min_size=order + 1, max_size=order + 1))
    if constant is not None:
        coeffs[0] = Fraction(constant)
    return TruncatedSeries(coeffs)


@st.composite
def series_pair(draw, max_order=10, constant=None):
    order = draw(st.integers(min_value=2, max_value=max_order))
    return (
        draw(series(order=order, constant=constant)),
        draw(series(order=order, constant=constant)),
    )


@st.composite
def series_triple(draw, max_order=8):
    order = draw(st.integers(min_value=2, max_value=max_order))
    return tuple(draw(series(order=order)) for _ in range(3))


def chern_triples(bound=500):
    ints = st.integers(min_value=-bound, max_value=bound)
    return st.builds(ChernNumbers, ints, ints, ints)


def set_partitions(n):
    return st.sampled_from(partitions(n))


def grid_coordinate(step=2, span=8):
    return st.integers(min_value=0, max_value=span).map(lambda k: Fraction(k, step))


@st.composite
def grid_configs(draw, n, span=8):
    pts = []
    for _ in range(n):
        pts.append((draw(grid_coordinate(span=span)),
                    draw(grid_coordinate(span=span)),
                    draw(grid_coordinate(span=span))))
    return PointConfig(tuple(pts))
