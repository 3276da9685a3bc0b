"""Span selection from per-token start/end probabilities.

This is the model-independent half of the reader: given the character
offsets of each context token and the start/end probability vectors a QA
model produced for one window, pick the best (start, end) token pairs and
map them back to character offsets in the original text. Long chunks are
handled upstream by sliding windows; candidates from overlapping windows
are merged here by keeping the best score per character span.
"""

from dataclasses import dataclass

MAX_ANSWER_TOKENS = 40
SPANS_PER_WINDOW = 5


@dataclass(frozen=True)
class SpanCandidate:
    start: int  # character offsets into the original chunk text
    end: int
    score: float  # product of start and end token probabilities


def select_spans(
    offsets: list[tuple[int, int] | None],
    start_probs: list[float],
    end_probs: list[float],
    top_n: int = SPANS_PER_WINDOW,
    max_answer_tokens: int = MAX_ANSWER_TOKENS,
) -> list[SpanCandidate]:
    """Best character spans of one window.

    ``offsets[i]`` is the (char_start, char_end) of context token i, or
    None for special/question tokens, which can never be part of a span.
    Only pairs with start <= end and a length of at most
    ``max_answer_tokens`` tokens are considered.
    """
    indexed = [
        (i, start_probs[i], end_probs[i])
        for i, offset in enumerate(offsets)
        if offset is not None and offset[0] != offset[1]
    ]
    if not indexed:
        return []

    best_starts = sorted(indexed, key=lambda t: -t[1])[: top_n * 2]
    best_ends = sorted(indexed, key=lambda t: -t[2])[: top_n * 2]

    candidates: dict[tuple[int, int], float] = {}
    for i, p_start, _ in best_starts:
        for j, _, p_end in best_ends:
            if j < i or j - i + 1 > max_answer_tokens:
                continue
            span = (offsets[i][0], offsets[j][1])
            score = p_start * p_end
            if score > candidates.get(span, 0.0):
                candidates[span] = score

    ranked = sorted(
        (SpanCandidate(start, end, score) for (start, end), score in candidates.items()),
        key=lambda c: (-c.score, c.start, c.end),
    )
    return ranked[:top_n]


def merge_window_candidates(
    per_window: list[list[SpanCandidate]], top_n: int
) -> list[SpanCandidate]:
    """Merge candidates from overlapping windows, best score per span."""
    merged: dict[tuple[int, int], float] = {}
    for window in per_window:
        for candidate in window:
            key = (candidate.start, candidate.end)
            if candidate.score > merged.get(key, 0.0):
                merged[key] = candidate.score
    ranked = sorted(
        (SpanCandidate(s, e, score) for (s, e), score in merged.items()),
        key=lambda c: (-c.score, c.start, c.end),
    )
    return ranked[:top_n]
