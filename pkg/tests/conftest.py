import importlib.util
import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parent.parent
FIXTURES = ROOT / "fixtures"
sys.path.insert(0, str(ROOT / "src"))

from bibliolens import load_corpus  # noqa: E402
from bibliolens.histogram import load_histogram  # noqa: E402


def _load_builder():
    spec = importlib.util.spec_from_file_location(
        "build_corpus_fixture", ROOT / "scripts" / "build_corpus_fixture.py"
    )
    module = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(module)
    return module


@pytest.fixture(scope="session")
def corpus_path(tmp_path_factory):
    """The full synthesized corpus, built once per session."""
    builder = _load_builder()
    path = tmp_path_factory.mktemp("corpus") / "mjm_2004_2008.json"
    data = builder.build()
    builder.verify(data)
    import json

    path.write_text(json.dumps(data, ensure_ascii=False, indent=1), encoding="utf-8")
    return path


@pytest.fixture(scope="session")
def corpus(corpus_path):
    return load_corpus(corpus_path)


@pytest.fixture(scope="session")
def lotka_observed():
    return load_histogram(FIXTURES / "lotka_observed.csv", key_kind="integer")


@pytest.fixture(scope="session")
def citation_ages():
    return load_histogram(FIXTURES / "citation_ages.csv", key_kind="text")


@pytest.fixture(scope="session")
def journal_freqs():
    return load_histogram(FIXTURES / "journal_citations.csv", key_kind="text")


@pytest.fixture(scope="session")
def places():
    return [line.strip() for line in (FIXTURES / "places.txt").read_text().splitlines() if line.strip()]


@pytest.fixture(scope="session")
def region_map():
    import csv

    with open(FIXTURES / "region_map.csv", newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        next(reader)
        return {country: region for country, region in reader}
