import pytest

# criterion label -> (passed, detail); filled in by test_acceptance.py
ACCEPTANCE: dict[str, tuple[bool, str]] = {}


@pytest.fixture
def record():
    def _record(label: str, passed: bool, detail: str = "") -> None:
        ACCEPTANCE[label] = (passed, detail)
        print(f"[{'PASS' if passed else 'FAIL'}] {label} {detail}")

    return _record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(ACCEPTANCE, key=_order):
        passed, detail = ACCEPTANCE[label]
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {label}  {detail}")


def _order(label: str):
    head = label.split()[0]
    return (int(head) if head.isdigit() else 99, label)
