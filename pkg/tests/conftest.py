import pytest
from hypothesis import settings

from linkquandle.diagram import BUILTIN_NAMES, builtin
from linkquandle.quandles import all_quandles, make_dihedral, make_eisermann, make_trivial

settings.register_profile("default", deadline=None, max_examples=100)
settings.load_profile("default")


def small_quandles():
    """Every quandle of order at most 4, plus some of order 5 and 6."""
    qs = [q for n in range(1, 5) for q in all_quandles(n)]
    qs += [make_dihedral(5), make_trivial(5), make_eisermann(2, 3),
           make_dihedral(6), make_trivial(6)]
    return qs


@pytest.fixture(scope="session")
def quandles_upto_6():
    return small_quandles()


@pytest.fixture(params=BUILTIN_NAMES)
def any_builtin(request):
    return builtin(request.param)


# criterion number -> (passed, detail); filled by test_acceptance.py
ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}")
