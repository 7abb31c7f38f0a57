from fractions import Fraction

from hypothesis import HealthCheck, settings, strategies as st

from districtgame import Districting, ShareProfile

settings.register_profile(
    "exact",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("exact")


@st.composite
def districtings(draw, max_districts=6, max_voters=10):
    n = draw(st.integers(min_value=1, max_value=max_voters))
    size = draw(st.integers(min_value=1, max_value=max_districts))
    votes = draw(st.lists(st.integers(0, n), min_size=size, max_size=size))
    return Districting(n=n, districts=tuple(votes))


@st.composite
def share_profiles(draw, max_districts=6, max_denominator=12):
    size = draw(st.integers(min_value=1, max_value=max_districts))
    shares = draw(
        st.lists(
            st.fractions(min_value=0, max_value=1, max_denominator=max_denominator),
            min_size=size,
            max_size=size,
        )
    )
    return ShareProfile(tuple(shares))


def cell_midpoints(d):
    """Thresholds guaranteed to avoid every share and complement boundary."""
    from districtgame import threshold_cells

    return [(lo + hi) / 2 for lo, hi in threshold_cells(d)]


ratios_01 = st.fractions(min_value=0, max_value=1, max_denominator=40)
positive_ratios = st.fractions(min_value=Fraction(1, 40), max_value=4, max_denominator=40)
