from fractions import Fraction

from hypothesis import strategies as st

small_int = st.integers(min_value=-5, max_value=5)
small_rat = st.builds(Fraction, small_int, st.integers(min_value=1, max_value=5))
nonzero_rat = small_rat.filter(lambda v: v != 0)


def ints(values):
    return [int(v) for v in values]


def tri_ints(triangle):
    return [[int(v) for v in row] for row in triangle]


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed"):
        for rep in terminalreporter.stats.get(outcome, []):
            if rep.when != "call":
                continue
            label = dict(rep.user_properties).get("criterion")
            if label:
                lines.append((label, "PASS" if outcome == "passed" else "FAIL"))
    if lines:
        terminalreporter.section("acceptance criteria")
        for label, status in sorted(lines, key=lambda t: int(t[0].split()[0])):
            terminalreporter.write_line(f"criterion {label}: {status}")
