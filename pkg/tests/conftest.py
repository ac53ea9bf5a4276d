import pytest

from flagcomb import gen


@pytest.fixture(scope="session")
def corpus():
    return gen.build_corpus(18)


@pytest.fixture(scope="session")
def corpus_by_name(corpus):
    return {e.name: e for e in corpus}


_ACCEPTANCE: list[str] = []


class _Criterion:
    def __init__(self, number, title):
        self.number, self.title = number, title
        self.details: list[str] = []

    def note(self, text):
        self.details.append(str(text))

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc, tb):
        ok = exc_type is None
        detail = "; ".join(self.details)
        if not ok:
            detail = f"{detail}; {exc_type.__name__}: {exc}".lstrip("; ")
        line = f"{'PASS' if ok else 'FAIL'} criterion {self.number:>2}: {self.title}"
        if detail:
            line += f" [{detail}]"
        print(line)
        _ACCEPTANCE.append(line)
        return False


@pytest.fixture
def criterion():
    return _Criterion


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
