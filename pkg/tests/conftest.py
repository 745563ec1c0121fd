"""Collects acceptance verdicts and prints them after the run.

Per-test prints are swallowed by capture, so the acceptance tests
register their verdicts here and a terminal-summary section emits one
line per criterion where it cannot be hidden.
"""

VERDICTS: dict[int, tuple[bool, str]] = {}
EXPECTED: set[int] = set()


def record_verdict(num: int, ok: bool, detail: str) -> None:
    VERDICTS[num] = (ok, detail)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not EXPECTED and not VERDICTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(EXPECTED | set(VERDICTS)):
        if num in VERDICTS:
            ok, detail = VERDICTS[num]
            line = f"[criterion {num}] {'PASS' if ok else 'FAIL'} ({detail})"
        else:
            line = f"[criterion {num}] FAIL (no verdict: test did not complete)"
        terminalreporter.write_line(line)
