"""TF-IDF inverted index over search chunks and cosine-ranked retrieval.

Each indexed chunk is represented by a sparse vector of per-term weights
``tf * idf`` with raw term counts and the smoothed inverse document
frequency ``idf(t) = ln((1 + N) / (1 + df(t))) + 1``. A question is scored
against a chunk by the cosine of their weight vectors; question terms that
never occur in the corpus still contribute to the question norm (df = 0).
"""

import math
import re
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, TYPE_CHECKING

from .errors import ChunkNotFoundError, EmptyQueryError

if TYPE_CHECKING:
    from .store import SearchChunk

# Fixed 30-entry stopword list; no stemming.
STOPWORDS = frozenset(
    "the a an and or of to in on for with is are was were be by as at that "
    "this it from we our can which such has have".split()
)

_TOKEN_RE = re.compile(r"[^\W_]+")


def tokenize(text: str) -> list[str]:
    """Lowercase terms of ``text``: letter/digit runs, length >= 2, no stopwords."""
    terms = []
    for run in _TOKEN_RE.findall(text.lower()):
        # \w also admits numeric signs such as fractions; only letters and
        # digits may form a term, so non-ascii runs get a second pass
        pieces = (run,) if run.isascii() else _letter_digit_runs(run)
        for piece in pieces:
            if len(piece) >= 2 and piece not in STOPWORDS:
                terms.append(piece)
    return terms


def _letter_digit_runs(run: str) -> list[str]:
    pieces: list[str] = []
    current: list[str] = []
    for ch in run:
        if ch.isalpha() or ch.isdigit():
            current.append(ch)
        elif current:
            pieces.append("".join(current))
            current = []
    if current:
        pieces.append("".join(current))
    return pieces


@dataclass(frozen=True)
class Posting:
    chunk_id: int
    tf: int  # raw occurrences of the term in the chunk, >= 1


@dataclass(frozen=True)
class ScoredChunk:
    chunk_id: int
    score: float


@dataclass
class InvertedIndex:
    """Immutable-after-build index snapshot over a set of chunks."""

    doc_count: int
    postings: dict[str, list[Posting]]
    df: dict[str, int]
    chunk_norms: dict[int, float]
    chunk_ids: frozenset[int] = field(default_factory=frozenset)

    def idf(self, term: str) -> float:
        """Smoothed inverse document frequency; >= 1 for indexed terms."""
        return math.log((1 + self.doc_count) / (1 + self.df.get(term, 0))) + 1.0


def build_index(chunks: Iterable["SearchChunk"]) -> InvertedIndex:
    """Build an inverted index from a stream of search chunks.

    Deterministic for a fixed input order and permutation-invariant in
    content: postings lists are sorted by chunk id and per-chunk norms are
    accumulated over sorted terms.
    """
    term_counts: list[tuple[int, Counter]] = []
    for chunk in chunks:
        term_counts.append((chunk.chunk_id, Counter(tokenize(chunk.text))))
    term_counts.sort(key=lambda item: item[0])

    doc_count = len(term_counts)
    df: Counter = Counter()
    for _, counts in term_counts:
        df.update(counts.keys())

    postings: dict[str, list[Posting]] = {t: [] for t in sorted(df)}
    for chunk_id, counts in term_counts:
        for term in sorted(counts):
            postings[term].append(Posting(chunk_id, counts[term]))

    index = InvertedIndex(
        doc_count=doc_count,
        postings=postings,
        df=dict(df),
        chunk_norms={},
        chunk_ids=frozenset(cid for cid, _ in term_counts),
    )
    for chunk_id, counts in term_counts:
        squared = sum(
            (tf * index.idf(term)) ** 2 for term, tf in sorted(counts.items())
        )
        if squared > 0.0:
            index.chunk_norms[chunk_id] = math.sqrt(squared)
    return index


def tfidf_weight(term: str, chunk_id: int, index: InvertedIndex) -> float:
    """Weight ``tf * idf`` of a term within a chunk; 0 iff the term is absent."""
    if chunk_id not in index.chunk_ids:
        raise ChunkNotFoundError(chunk_id)
    for posting in index.postings.get(term, ()):
        if posting.chunk_id == chunk_id:
            return posting.tf * index.idf(term)
    return 0.0


def retrieve(question: str, k: int, index: InvertedIndex) -> list[ScoredChunk]:
    """Top-k chunks by cosine similarity between question and chunk vectors.

    Chunks with score 0 are omitted; results are sorted by score descending
    with ties broken by ascending chunk id. Raises EmptyQueryError when the
    question tokenizes to nothing. For category-filtered search, build the
    index over the filtered chunk stream and retrieve against it.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    question_counts = Counter(tokenize(question))
    if not question_counts:
        raise EmptyQueryError("question contains no searchable terms")

    weights = {t: tf * index.idf(t) for t, tf in sorted(question_counts.items())}
    question_norm = math.sqrt(sum(w * w for w in weights.values()))

    dot: dict[int, float] = {}
    for term, question_weight in weights.items():
        idf = index.idf(term)
        for posting in index.postings.get(term, ()):
            contribution = question_weight * posting.tf * idf
            dot[posting.chunk_id] = dot.get(posting.chunk_id, 0.0) + contribution

    scored = [
        ScoredChunk(cid, value / (question_norm * index.chunk_norms[cid]))
        for cid, value in dot.items()
        if value > 0.0
    ]
    scored.sort(key=lambda s: (-s.score, s.chunk_id))
    return scored[:k]
