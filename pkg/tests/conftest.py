import os

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from deligne_o.partition import Partition

settings.register_profile(
    "repo",
    deadline=None,
    derandomize=True,
    max_examples=int(os.environ.get("HYPOTHESIS_EXAMPLES", "60")),
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("repo")


@st.composite
def partitions(draw, max_size=8):
    """Random partition of size <= max_size."""
    n = draw(st.integers(0, max_size))
    parts = []
    cap = n
    while n:
        p = draw(st.integers(1, min(n, cap)))
        parts.append(p)
        n -= p
        cap = p
    return Partition(parts)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
