from __future__ import annotations

from mixspec.corpus import family_corpus, random_corpus, standard_corpus
from mixspec.graph import is_connected
from mixspec.verify import run_checks


def test_run_checks_all_pass():
    results, notes = run_checks(max_n=8, random_count=10)
    assert all(r.passed for r in results), [r for r in results if not r.passed]
    assert len(results) == 15
    assert any("variance growth" in note for note in notes)
    assert any("path spectra" in note for note in notes)


def test_random_corpus_is_deterministic_and_valid():
    a = random_corpus(12, 9, seed=3)
    b = random_corpus(12, 9, seed=3)
    assert [g for _, g in a] == [g for _, g in b]
    for _, g in a:
        assert g.min_degree() >= 2
        assert is_connected(g)
        assert g.vertex_count <= 9


def test_standard_corpus_composition():
    corpus = standard_corpus(max_vertices=10, random_count=7)
    names = [name for name, _ in corpus]
    assert "petersen" in names and "cube" in names
    assert sum(1 for n in names if n.startswith("random-")) == 7
    assert len(names) == len(set(names))
    assert len(family_corpus(10)) + 7 == len(corpus)
