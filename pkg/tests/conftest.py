"""Shared test configuration: prints one line per acceptance check."""

from __future__ import annotations


_RESULTS: dict[str, str] = {}

ACCEPTANCE_LABELS = [
    ("test_a01", "character tables of S(3), S(4), S(5) vs tabulated values"),
    ("test_a02", "trivial-branching columns"),
    ("test_a03", "Young projectors, Coxeter matrices and fixed vectors"),
    ("test_a04", "O(4) class characters and their recursions"),
    ("test_a05", "O(4)>S(5) multiplicity table vs tabulated values"),
    ("test_a06", "O(3)>S(4) multiplicity table from first principles"),
    ("test_a07", "circle selection rules vs averaging oracle"),
    ("test_a08", "projector ranks vs character-theoretic counts"),
    ("test_a09", "mode invariance with negative control"),
    ("test_a10", "Wigner/braid/factorization property suite"),
]


def pytest_runtest_logreport(report):
    if report.when != "call" or "test_acceptance" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    _RESULTS[name] = report.outcome


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _RESULTS:
        return
    lines = []
    for idx, (prefix, label) in enumerate(ACCEPTANCE_LABELS, start=1):
        outcome = next(
            (o for name, o in _RESULTS.items() if name.startswith(prefix)), None
        )
        if outcome is None:
            continue
        status = "PASS" if outcome == "passed" else "FAIL"
        lines.append(f"  [{idx:2d}] {status}  {label}")
    if lines:
        terminalreporter.write_line("")
        terminalreporter.write_line("acceptance summary:")
        for line in lines:
            terminalreporter.write_line(line)
