"""Shared fixtures.  The acceptance recorder prints one line per criterion at the end of the run."""

from collections import OrderedDict

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile("default", deadline=None, max_examples=40,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

_ACCEPTANCE: "OrderedDict[str, dict]" = OrderedDict()


class AcceptanceLog:
    """Collects sub-results per criterion; a criterion passes only if every sub-result does."""

    def record(self, cid: str, title: str, ok: bool, detail: str = "") -> bool:
        entry = _ACCEPTANCE.setdefault(cid, {"title": title, "ok": True, "details": []})
        entry["ok"] = entry["ok"] and bool(ok)
        if detail:
            entry["details"].append(("ok " if ok else "BAD ") + detail)
        return bool(ok)


@pytest.fixture(scope="session")
def acceptance():
    return AcceptanceLog()


def _sort_key(cid: str):
    return int(cid[1:]) if cid[1:].isdigit() else cid


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for cid in sorted(_ACCEPTANCE, key=_sort_key):
        entry = _ACCEPTANCE[cid]
        tr.write_line(f"{'PASS' if entry['ok'] else 'FAIL'}  {cid:<4} {entry['title']}")
        for d in entry["details"]:
            tr.write_line(f"        {d}")
