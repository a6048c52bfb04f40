"""Seeded Zipf-distributed synthetic corpora.

Randomness comes from NumPy's PCG64 bit generator (PCG XSL RR 128/64)
seeded with the ZipfSpec 64-bit seed, and ``Generator.random`` doubles.
Each token is drawn by binary search of one uniform draw in the
cumulative distribution, so a ZipfSpec always yields the same token stream.

Type labels are letter-only (``wa``, ``wb``, ..., ``wz``, ``waa``, ...)
so generated text passes through the tokenizer unchanged.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import GenError

__all__ = [
    "ZipfSpec",
    "zipf_probabilities",
    "harmonic",
    "rank_label",
    "label_rank",
    "zipf_ranks",
    "zipf_text",
    "write_corpus",
]

_ALPHABET = "abcdefghijklmnopqrstuvwxyz"


@dataclass(frozen=True)
class ZipfSpec:
    vocab_size: int
    exponent: float
    n_tokens: int
    seed: int = 0

    def __post_init__(self):
        if int(self.vocab_size) != self.vocab_size or self.vocab_size < 2:
            raise GenError(f"vocab_size must be an integer >= 2, got {self.vocab_size}")
        if not (np.isfinite(self.exponent) and self.exponent > 0):
            raise GenError(f"exponent must be positive, got {self.exponent}")
        if int(self.n_tokens) != self.n_tokens or self.n_tokens < 1:
            raise GenError(f"n_tokens must be an integer >= 1, got {self.n_tokens}")
        if int(self.seed) != self.seed or not 0 <= self.seed < 2**64:
            raise GenError(f"seed must be a 64-bit unsigned integer, got {self.seed}")


def harmonic(vocab_size: int, exponent: float) -> float:
    """Generalized harmonic number sum_{r=1..V} r**-s."""
    r = np.arange(1, vocab_size + 1, dtype=float)
    return float(np.sum(r ** -exponent))


def zipf_probabilities(vocab_size: int, exponent: float) -> np.ndarray:
    r = np.arange(1, vocab_size + 1, dtype=float)
    w = r ** -exponent
    return w / w.sum()


def rank_label(rank: int) -> str:
    """Bijective base-26 label: 1 -> 'wa', 26 -> 'wz', 27 -> 'waa'."""
    if rank < 1:
        raise GenError(f"rank must be >= 1, got {rank}")
    chars = []
    while rank:
        rank, rem = divmod(rank - 1, 26)
        chars.append(_ALPHABET[rem])
    return "w" + "".join(reversed(chars))


def label_rank(label: str) -> int:
    if not label.startswith("w") or len(label) < 2:
        raise GenError(f"not a synthetic label: {label!r}")
    rank = 0
    for ch in label[1:]:
        rank = rank * 26 + _ALPHABET.index(ch) + 1
    return rank


def zipf_ranks(spec: ZipfSpec) -> np.ndarray:
    """Sampled ranks (1-based) as an int array of length ``n_tokens``."""
    cdf = np.cumsum(zipf_probabilities(spec.vocab_size, spec.exponent))
    cdf[-1] = 1.0
    rng = np.random.Generator(np.random.PCG64(spec.seed))
    u = rng.random(spec.n_tokens)
    return np.searchsorted(cdf, u, side="right") + 1


def zipf_text(spec: ZipfSpec) -> list[str]:
    ranks = zipf_ranks(spec)
    labels = {int(r): rank_label(int(r)) for r in np.unique(ranks)}
    return [labels[r] for r in ranks.tolist()]


def write_corpus(tokens, path, tokens_per_line: int = 12) -> Path:
    """Write tokens space-separated, ``tokens_per_line`` per line, UTF-8, ``\\n`` endings."""
    if tokens_per_line < 1:
        raise GenError("tokens_per_line must be >= 1")
    tokens = list(tokens)
    path = Path(path)
    lines = [
        " ".join(tokens[i:i + tokens_per_line])
        for i in range(0, len(tokens), tokens_per_line)
    ]
    path.write_text("".join(line + "\n" for line in lines), encoding="utf-8", newline="\n")
    return path
