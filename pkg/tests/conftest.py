import pytest

from isgraph.groups import build_group
from isgraph.lattice import enumerate_subgroups
from isgraph.theorems import build_catalog, group_data, run_verification

CRITERIA: dict[int, tuple[bool, str]] = {}


def record(number: int, ok: bool, detail: str = "") -> None:
    CRITERIA[number] = (bool(ok), detail)


@pytest.fixture(scope="session")
def catalog_200():
    return build_catalog(200)


@pytest.fixture(scope="session")
def report_200(catalog_200):
    return run_verification(catalog_200)


@pytest.fixture(scope="session")
def catalog_graphs(catalog_200):
    specs = list(dict.fromkeys(c.group_spec for c in catalog_200))
    return {s: group_data(s).graph for s in specs}


@pytest.fixture(scope="session")
def cyclic_lattices():
    return {n: enumerate_subgroups(build_group(f"C{n}")) for n in range(2, 513)}


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(CRITERIA):
        ok, detail = CRITERIA[n]
        line = f"criterion {n:>2}: {'PASS' if ok else 'FAIL'}"
        if detail:
            line += f"  {detail}"
        terminalreporter.write_line(line)
