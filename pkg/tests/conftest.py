import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from modext.constructions import bowtie
from modext.instances import corpus_recipes, generate_corpus

CORPUS_DIR = Path(__file__).resolve().parent.parent / "corpus"

ACCEPTANCE: dict[int, tuple[bool, str]] = {}


@pytest.fixture(scope="session")
def corpus():
    return generate_corpus(0)


@pytest.fixture(scope="session")
def recipes():
    return corpus_recipes(0)


@pytest.fixture(scope="session")
def products(corpus):
    return [bowtie(m) for m in corpus]


@pytest.fixture(scope="session")
def corpus_algebras(corpus):
    """Distinct base and inner algebras occurring in the corpus."""
    seen = []
    for m in corpus:
        for alg in (m.base, m.inner):
            if not any(a.same_structure(alg) for a in seen):
                seen.append(alg)
    return seen


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}")


@pytest.fixture(scope="session")
def corpus_files():
    return sorted(str(p) for p in CORPUS_DIR.glob("*.json"))
