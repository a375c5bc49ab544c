import pytest

from liecomplete import catalog
from liecomplete.fields import GF, QQ

_acceptance: list[tuple[int, str, str, float]] = []


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): exit criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("acceptance")
    if mark is None or rep.when != "call":
        return
    number, title = mark.args
    _acceptance.append((number, title, "PASS" if rep.passed else "FAIL", rep.duration))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, status, duration in sorted(_acceptance):
        terminalreporter.write_line(f"criterion {number:>2} {status}  {title}  ({duration:.2f}s)")


def _catalog():
    return {
        "abelian_1": catalog.abelian(1),
        "abelian_2": catalog.abelian(2),
        "abelian_3": catalog.abelian(3),
        "heisenberg": catalog.heisenberg(),
        "affine2": catalog.affine2(),
        "sl2": catalog.sl(2),
        "sl2_F5": catalog.sl(2, GF(5)),
        "sl3": catalog.sl(3),
        "sl3_F2": catalog.sl(3, GF(2)),
        "current_sl2_2": catalog.current_sl2(2),
        "sl2+sl2": catalog.direct_sum(catalog.sl(2), catalog.sl(2)),
        "sl2+abelian_1": catalog.direct_sum(catalog.sl(2), catalog.abelian(1)),
    }


CATALOG = _catalog()
PERFECT_CENTERLESS = ["sl2", "sl2_F5", "sl3", "sl3_F2", "current_sl2_2", "sl2+sl2"]
CENTERLESS = PERFECT_CENTERLESS + ["affine2"]


@pytest.fixture(params=sorted(CATALOG))
def any_algebra(request):
    return CATALOG[request.param]


@pytest.fixture
def sl2():
    return catalog.sl(2, QQ)
