"""Shared fixtures: the worked-example interval sets and a hypothesis strategy."""

from hypothesis import strategies as st

FIG_OVERLAP = [(2, 4), (2.5, 3.5)]
FIG_NONCONVEX = [(2, 5), (3, 5), (6, 8), (3, 7)]
FIG_FULLCORE = [(2, 5), (3, 5), (4, 6), (3, 7)]


def finite_intervals(min_size=1, max_size=6):
    endpoint = st.floats(-50, 50, allow_nan=False, allow_infinity=False)
    pair = st.tuples(endpoint, endpoint).map(sorted)
    return st.lists(pair, min_size=min_size, max_size=max_size)


def lattice_intervals(min_size=1, max_size=6, step=0.25):
    """Endpoints on a coarse lattice: overlap widths are never fp slivers,
    so length ratios stay numerically stable under translation/scaling."""
    endpoint = st.integers(-200, 200).map(lambda k: k * step)
    pair = st.tuples(endpoint, endpoint).map(sorted)
    return st.lists(pair, min_size=min_size, max_size=max_size)
