"""Shared test configuration.

Hypothesis runs derandomized so that every property failure is
reproducible from a clean checkout; the acceptance tests report their
verdicts through `record_acceptance`, which the terminal-summary hook
prints as one numbered line per criterion at the end of the run.
"""

from hypothesis import HealthCheck, settings

settings.register_profile(
    "fareygaps",
    derandomize=True,
    deadline=None,
    max_examples=200,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much],
)
settings.load_profile("fareygaps")


_ACCEPTANCE: list = []


def record_acceptance(num: int, ok: bool, detail: str) -> None:
    verdict = "PASS" if ok else "FAIL"
    _ACCEPTANCE.append((num, f"criterion {num:2d}: {verdict} - {detail}"))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(_ACCEPTANCE):
            terminalreporter.write_line(line)
