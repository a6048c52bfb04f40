"""Text loading, normalization, tokenization and fragmenting.

Tokens are maximal runs of Unicode letters. An apostrophe or a hyphen-minus
survives inside a token only when a letter sits on both sides of it, so
``self-evident`` and ``cat's`` are single tokens while ``--`` or a trailing
``'`` act as separators. Digits, punctuation and symbols always separate.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path

from .errors import IngestError

__all__ = [
    "Document",
    "Fragment",
    "normalize",
    "tokenize",
    "make_document",
    "read_document",
    "chunk_by_lines",
    "chunk_by_delimiter",
]

_JOINERS = frozenset("'-")
_NEWLINES = re.compile(r"\r\n?")


def _decode(data: bytes) -> str:
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise IngestError(
            f"invalid UTF-8 at byte offset {exc.start}", offset=exc.start
        ) from None


def normalize(raw_text: str | bytes) -> str:
    """Case-fold ``raw_text`` and convert CRLF / CR line endings to ``\\n``.

    Bytes are decoded as strict UTF-8; a decoding failure raises
    :class:`IngestError` carrying the offending byte offset.
    """
    if isinstance(raw_text, (bytes, bytearray)):
        raw_text = _decode(bytes(raw_text))
    return _NEWLINES.sub("\n", raw_text).casefold()


def tokenize(normalized_text: str) -> list[str]:
    text = normalized_text.replace("’", "'")
    n = len(text)
    tokens = []
    start = None
    for i, ch in enumerate(text):
        if ch.isalpha():
            if start is None:
                start = i
        elif (
            ch in _JOINERS
            and start is not None
            and i + 1 < n
            and text[i + 1].isalpha()
        ):
            continue
        elif start is not None:
            tokens.append(text[start:i])
            start = None
    if start is not None:
        tokens.append(text[start:])
    return tokens


def _split_lines(text: str) -> list[str]:
    if not text:
        return []
    lines = text.split("\n")
    if lines[-1] == "":
        lines.pop()
    return lines


@dataclass(frozen=True)
class Document:
    """A tokenized text.

    ``lines`` keeps the original letter case (only line endings are
    normalized) so chapter patterns can match headings as written;
    ``line_tokens`` holds the normalized tokens of each line.
    """

    id: str
    lines: list[str]
    line_tokens: list[list[str]] = field(repr=False)

    @cached_property
    def tokens(self) -> list[str]:
        return [tok for toks in self.line_tokens for tok in toks]

    def __len__(self):
        return len(self.tokens)


@dataclass(frozen=True)
class Fragment:
    index: int
    tokens: list[str]
    first_line: int = 0
    n_lines: int = 0

    def __len__(self):
        return len(self.tokens)


def make_document(raw_text: str | bytes, id: str = "doc") -> Document:
    if isinstance(raw_text, (bytes, bytearray)):
        raw_text = _decode(bytes(raw_text))
    lines = _split_lines(_NEWLINES.sub("\n", raw_text))
    return Document(
        id=id,
        lines=lines,
        line_tokens=[tokenize(normalize(line)) for line in lines],
    )


def read_document(path, id: str | None = None) -> Document:
    """Load a UTF-8 text file. OS errors propagate unchanged."""
    path = Path(path)
    return make_document(path.read_bytes(), id=id if id is not None else path.stem)


def _fragment(doc: Document, index: int, lo: int, hi: int) -> Fragment:
    toks = [t for line in doc.line_tokens[lo:hi] for t in line]
    return Fragment(index=index, tokens=toks, first_line=lo + 1, n_lines=hi - lo)


def chunk_by_lines(doc: Document, n_lines: int) -> list[Fragment]:
    """Split into consecutive groups of ``n_lines`` lines; the last keeps the remainder."""
    if n_lines < 1:
        raise IngestError(f"n_lines must be >= 1, got {n_lines}")
    if not doc.lines:
        raise IngestError(f"document {doc.id!r} is empty")
    total = len(doc.lines)
    return [
        _fragment(doc, k + 1, lo, min(lo + n_lines, total))
        for k, lo in enumerate(range(0, total, n_lines))
    ]


def chunk_by_delimiter(doc: Document, pattern: str) -> list[Fragment]:
    """Start a new fragment at every line where ``pattern`` matches.

    The pattern is searched within each line (anchor it with ``^``/``$`` for
    stricter matching). The matching line opens its fragment. Lines before
    the first match form a leading fragment only if they contain tokens;
    token-free leading lines are folded into the first chapter. With no
    match at all the whole document is one fragment.
    """
    try:
        rx = re.compile(pattern)
    except re.error as exc:
        raise IngestError(f"invalid chapter pattern {pattern!r}: {exc}") from None
    if not doc.lines:
        raise IngestError(f"document {doc.id!r} is empty")

    starts = [i for i, line in enumerate(doc.lines) if rx.search(line)]
    if not starts:
        return [_fragment(doc, 1, 0, len(doc.lines))]
    if starts[0] > 0:
        if any(doc.line_tokens[i] for i in range(starts[0])):
            starts.insert(0, 0)
        else:
            starts[0] = 0
    bounds = starts + [len(doc.lines)]
    return [
        _fragment(doc, k + 1, bounds[k], bounds[k + 1])
        for k in range(len(starts))
    ]
