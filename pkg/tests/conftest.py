import pytest

from posgroups import Cyclic, DirectProduct, close_generators

_acceptance = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    if rep.when == "call" or (rep.when == "setup" and rep.outcome != "passed"):
        number, title = marker.args
        _acceptance.append((number, title, rep.outcome, rep.duration))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, outcome, duration in sorted(_acceptance):
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"[{status}] criterion {number:>2}: {title} ({duration:.1f}s)")


def quaternion_regular_generators():
    """Right multiplication by i and j on Q_8 = {±1, ±i, ±j, ±k}, as permutations."""
    units = "1ijk"
    table = {  # unit products without sign
        ("1", u): (1, u) for u in units
    }
    table.update({(u, "1"): (1, u) for u in units})
    table.update({
        ("i", "i"): (-1, "1"), ("j", "j"): (-1, "1"), ("k", "k"): (-1, "1"),
        ("i", "j"): (1, "k"), ("j", "k"): (1, "i"), ("k", "i"): (1, "j"),
        ("j", "i"): (-1, "k"), ("k", "j"): (-1, "i"), ("i", "k"): (-1, "j"),
    })
    elements = [(s, u) for s in (1, -1) for u in units]
    index = {e: n for n, e in enumerate(elements)}

    def right_mult(b):
        perm = []
        for s, u in elements:
            t, w = table[(u, b)]
            perm.append(index[(s * t, w)])
        return perm

    return [right_mult("i"), right_mult("j")]


@pytest.fixture
def q8():
    return close_generators(8, quaternion_regular_generators())


@pytest.fixture
def d4():
    return close_generators(4, [[1, 2, 3, 0], [0, 3, 2, 1]])


@pytest.fixture
def klein():
    return DirectProduct(Cyclic(2), Cyclic(2))
