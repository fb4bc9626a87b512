import os
import sys

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from multiseg.core import Multisegment, Segment  # noqa: E402

settings.register_profile(
    "default", max_examples=150, deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


@st.composite
def segments(draw, lo=0, hi=5):
    a = draw(st.integers(lo, hi))
    b = draw(st.integers(a, hi))
    return Segment(a, b)


def multisegments(lo=0, hi=4, max_size=4):
    return st.lists(segments(lo, hi), max_size=max_size).map(Multisegment)
