"""Extractive answer readers: a deterministic lexical baseline and a client
for the remote reader wire protocol.

Both readers satisfy the same contract: given a question, candidate chunks,
and a candidate budget, return answer spans with character offsets into the
supplied chunk text and a confidence in [0, 1], sorted by confidence.

The baseline slides a window of three consecutive sentences over each
chunk. Window confidence is the idf-weighted coverage of the question
terms, so 1.0 means every question term occurs in the window. The answer
span inside a winning window is the longest fragment between strong
punctuation marks that contains the highest-idf matched question term.
"""

from dataclasses import dataclass
from typing import Callable

import requests

from .errors import EmptyQueryError, ReaderUnavailableError
from .retriever import tokenize
from .textprep import sentence_spans

WINDOW_SENTENCES = 3
MIN_CONFIDENCE = 0.05
MAX_PER_CHUNK = 2
CONTEXT_CHARS = 200

# Span delimiters. The comma stays out so that enumerations
# ("X, Y, and Z are used") survive as one answer span.
_DELIMITERS = ".;:!?"

IdfLookup = Callable[[str], float]


@dataclass(frozen=True)
class ReaderRequest:
    question: str
    chunks: list[tuple[int, str]]  # (chunk_id, text)
    top_c: int

    def __post_init__(self):
        if not self.chunks:
            raise ValueError("chunks must be non-empty")
        if self.top_c < 1:
            raise ValueError("top_c must be >= 1")


@dataclass(frozen=True)
class AnswerCandidate:
    chunk_id: int
    start: int
    end: int
    answer_text: str
    confidence: float
    context: str


def score_window(
    question_terms: list[str], window_text: str, idf_lookup: IdfLookup
) -> float:
    """Idf-weighted share of distinct question terms present in the window.

    1.0 iff every question term occurs in the window, 0.0 iff none do.
    """
    if not question_terms:
        raise ValueError("question_terms must be non-empty")
    terms = sorted(set(question_terms))
    present = set(tokenize(window_text))
    total = sum(idf_lookup(t) for t in terms)
    matched = sum(idf_lookup(t) for t in terms if t in present)
    return matched / total


class BaselineReader:
    """Pure, stateless lexical reader; safe for concurrent use."""

    def __init__(self, idf_lookup: IdfLookup | None = None):
        self._idf = idf_lookup if idf_lookup is not None else (lambda term: 1.0)

    def extract_answers(self, request: ReaderRequest) -> list[AnswerCandidate]:
        question_terms = sorted(set(tokenize(request.question)))
        if not question_terms:
            raise EmptyQueryError("question contains no searchable terms")
        candidates: list[AnswerCandidate] = []
        for chunk_id, text in request.chunks:
            candidates.extend(
                self._chunk_candidates(chunk_id, text, question_terms)
            )
        candidates.sort(key=lambda c: (-c.confidence, c.chunk_id, c.start))
        return candidates[: request.top_c]

    def _chunk_candidates(
        self, chunk_id: int, text: str, question_terms: list[str]
    ) -> list[AnswerCandidate]:
        spans = sentence_spans(text)
        if not spans:
            return []
        windows = []
        for i in range(max(1, len(spans) - WINDOW_SENTENCES + 1)):
            group = spans[i : i + WINDOW_SENTENCES]
            start, end = group[0][0], group[-1][1]
            confidence = score_window(question_terms, text[start:end], self._idf)
            if confidence >= MIN_CONFIDENCE:
                windows.append((confidence, start, end))
        windows.sort(key=lambda w: (-w[0], w[1]))

        picked: list[AnswerCandidate] = []
        seen: set[tuple[int, int]] = set()
        for confidence, window_start, window_end in windows:
            span = _answer_span(
                text, window_start, window_end, question_terms, self._idf
            )
            if span is None or span in seen:
                continue
            seen.add(span)
            start, end = span
            picked.append(
                AnswerCandidate(
                    chunk_id=chunk_id,
                    start=start,
                    end=end,
                    answer_text=text[start:end],
                    confidence=confidence,
                    context=_context(text, start, end),
                )
            )
            if len(picked) == MAX_PER_CHUNK:
                break
        return picked


def _answer_span(
    text: str,
    window_start: int,
    window_end: int,
    question_terms: list[str],
    idf_lookup: IdfLookup,
) -> tuple[int, int] | None:
    """Longest delimiter-bounded fragment holding the top matched term."""
    window_terms = set(tokenize(text[window_start:window_end]))
    matched = [t for t in question_terms if t in window_terms]
    if not matched:
        return None
    target = sorted(matched, key=lambda t: (-idf_lookup(t), t))[0]

    best: tuple[int, int] | None = None
    for start, end in _fragments(text, window_start, window_end):
        if target not in tokenize(text[start:end]):
            continue
        if best is None or end - start > best[1] - best[0]:
            best = (start, end)
    return best


def _fragments(text: str, start: int, end: int) -> list[tuple[int, int]]:
    """Trimmed, non-empty spans between delimiter characters in [start, end)."""
    fragments = []
    fragment_start = start
    for i in range(start, end):
        if text[i] in _DELIMITERS:
            fragments.append((fragment_start, i))
            fragment_start = i + 1
    fragments.append((fragment_start, end))

    trimmed = []
    for s, e in fragments:
        while s < e and text[s].isspace():
            s += 1
        while e > s and text[e - 1].isspace():
            e -= 1
        if s < e:
            trimmed.append((s, e))
    return trimmed


def _context(text: str, start: int, end: int) -> str:
    return text[max(0, start - CONTEXT_CHARS) : min(len(text), end + CONTEXT_CHARS)]


class RemoteReader:
    """Client for a reader service speaking the ``POST /read`` protocol."""

    def __init__(
        self,
        base_url: str,
        timeout: float = 60.0,
        session: requests.Session | None = None,
    ):
        self.base_url = base_url.rstrip("/")
        self.timeout = timeout
        self._session = session or requests.Session()

    def extract_answers(self, request: ReaderRequest) -> list[AnswerCandidate]:
        payload = {
            "question": request.question,
            "top_c": request.top_c,
            "chunks": [
                {"chunk_id": cid, "text": text} for cid, text in request.chunks
            ],
        }
        try:
            response = self._session.post(
                f"{self.base_url}/read", json=payload, timeout=self.timeout
            )
        except requests.RequestException as exc:
            raise ReaderUnavailableError(
                f"reader service unreachable: {exc}"
            ) from exc
        if response.status_code >= 500:
            raise ReaderUnavailableError(
                f"reader service error: HTTP {response.status_code}"
            )
        if response.status_code == 400:
            raise EmptyQueryError("reader rejected the question")
        if response.status_code != 200:
            raise ReaderUnavailableError(
                f"unexpected reader response: HTTP {response.status_code}"
            )

        chunk_texts = dict(request.chunks)
        try:
            answers = response.json()["answers"]
            candidates = [
                AnswerCandidate(
                    chunk_id=a["chunk_id"],
                    start=a["start"],
                    end=a["end"],
                    answer_text=a["text"],
                    confidence=a["confidence"],
                    context=_context(
                        chunk_texts[a["chunk_id"]], a["start"], a["end"]
                    ),
                )
                for a in answers
            ]
        except (KeyError, TypeError, ValueError) as exc:
            raise ReaderUnavailableError(
                f"malformed reader response: {exc}"
            ) from exc
        candidates.sort(key=lambda c: (-c.confidence, c.chunk_id, c.start))
        return candidates[: request.top_c]
