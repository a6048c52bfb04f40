import math

import numpy as np
import pytest

from lexdyn import GenError, ZipfSpec, zipf_text
from lexdyn.ingest import read_document
from lexdyn.synthgen import (
    harmonic,
    label_rank,
    rank_label,
    write_corpus,
    zipf_probabilities,
    zipf_ranks,
)


def test_determinism():
    spec = ZipfSpec(vocab_size=2, exponent=1, n_tokens=4, seed=7)
    assert zipf_text(spec) == zipf_text(spec)
    big = ZipfSpec(1000, 1.2, 5000, seed=2**64 - 1)
    assert zipf_text(big) == zipf_text(big)
    assert zipf_text(big) != zipf_text(ZipfSpec(1000, 1.2, 5000, seed=1))


def test_files_byte_identical(tmp_path):
    spec = ZipfSpec(vocab_size=2, exponent=1, n_tokens=4, seed=7)
    a = write_corpus(zipf_text(spec), tmp_path / "a.txt")
    b = write_corpus(zipf_text(spec), tmp_path / "b.txt")
    assert a.read_bytes() == b.read_bytes()


@pytest.mark.parametrize("V, s", [(2, 1.0), (1000, 1.0), (10000, 1.1), (50, 2.5)])
def test_probabilities(V, s):
    p = zipf_probabilities(V, s)
    assert abs(p.sum() - 1) < 1e-12
    h = math.fsum(r ** -s for r in range(1, V + 1))
    assert harmonic(V, s) == pytest.approx(h, rel=1e-12)
    assert p[0] == pytest.approx(1 / h, rel=1e-12)
    assert np.all(np.diff(p) < 0)


def test_rank_one_frequency():
    h = math.fsum(1 / r for r in range(1, 1001))
    assert 1 / h == pytest.approx(0.1336, abs=1e-4)
    toks = zipf_text(ZipfSpec(1000, 1.0, 100000, seed=42))
    share = toks.count(rank_label(1)) / len(toks)
    assert abs(share - 1 / h) <= 0.10 / h


def test_sampling_matches_distribution():
    # chi-square style check on the head of the distribution
    spec = ZipfSpec(20, 1.0, 200000, seed=5)
    counts = np.bincount(zipf_ranks(spec), minlength=21)[1:]
    expected = zipf_probabilities(20, 1.0) * spec.n_tokens
    z = (counts - expected) / np.sqrt(expected)
    assert np.all(np.abs(z) < 5)


def test_conservation():
    for V, n in [(10, 1000), (5000, 300)]:
        toks = zipf_text(ZipfSpec(V, 1.0, n, seed=9))
        assert len(toks) == n
        assert len(set(toks)) <= min(V, n)
        assert all(1 <= label_rank(t) <= V for t in set(toks))


def test_labels():
    assert [rank_label(r) for r in (1, 2, 26, 27, 28, 52, 53, 702, 703)] == [
        "wa", "wb", "wz", "waa", "wab", "waz", "wba", "wzz", "waaa",
    ]
    for r in range(1, 3000):
        assert label_rank(rank_label(r)) == r
        assert rank_label(r).isalpha()


@pytest.mark.parametrize(
    "kwargs",
    [
        dict(vocab_size=1, exponent=1, n_tokens=5),
        dict(vocab_size=10, exponent=0, n_tokens=5),
        dict(vocab_size=10, exponent=-1, n_tokens=5),
        dict(vocab_size=10, exponent=1, n_tokens=0),
        dict(vocab_size=10, exponent=1, n_tokens=5, seed=-1),
        dict(vocab_size=10, exponent=1, n_tokens=5, seed=2**64),
        dict(vocab_size=10.5, exponent=1, n_tokens=5),
        dict(vocab_size=10, exponent=float("nan"), n_tokens=5),
    ],
)
def test_invalid_spec(kwargs):
    with pytest.raises(GenError):
        ZipfSpec(**kwargs)


def test_round_trip_through_ingest(tmp_path):
    toks = zipf_text(ZipfSpec(300, 1.0, 1001, seed=4))
    path = write_corpus(toks, tmp_path / "c.txt", tokens_per_line=10)
    doc = read_document(path)
    assert doc.tokens == toks
    assert len(doc.lines) == 101
