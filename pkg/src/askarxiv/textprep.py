"""Text cleanup, sentence splitting, and word-budget chunking.

The ingestion pipeline feeds every article through the same three steps:
``preprocess`` normalizes raw extracted text into one single-spaced block,
``split_sentences`` cuts it into sentences with a small rule set, and
``chunk_sentences`` greedily packs sentences into passages that stay under
a word budget without ever cutting a sentence in half.
"""

import re
from collections import Counter

# Tokens that end with '.' without ending a sentence. Matching is
# case-sensitive and requires a token boundary on the left ("et al"
# carries its own internal space).
ABBREVIATIONS = ("e.g", "i.e", "et al", "Fig", "Eq", "vs", "Dr", "No", "cf")

_TERMINALS = ".!?"
_WS_RUN = re.compile(r"\s+")

DEFAULT_CHUNK_WORDS = 500


def preprocess(body_text: str, page_texts: list[str]) -> str:
    """Clean raw article text into a single-spaced block.

    Page texts take precedence over ``body_text`` when present. With three
    or more pages, lines whose trimmed form repeats on at least 60% of the
    pages (and on at least 3 pages) are dropped as running headers/footers
    before the pages are joined. Empty lines vanish and every whitespace
    run collapses to a single space; the result is trimmed at both ends.
    """
    pages = list(page_texts)
    if len(pages) >= 3:
        pages = _strip_repeated_lines(pages)
    text = "\n".join(pages) if pages else body_text
    return _WS_RUN.sub(" ", text).strip()


def _strip_repeated_lines(pages: list[str]) -> list[str]:
    page_lines = [[ln.strip() for ln in page.splitlines()] for page in pages]
    page_presence: Counter = Counter()
    for lines in page_lines:
        for ln in set(lines):
            if ln:
                page_presence[ln] += 1
    n_pages = len(pages)
    banned = {
        ln for ln, n in page_presence.items() if n >= 3 and n / n_pages >= 0.6
    }
    if not banned:
        return pages
    return [
        "\n".join(ln for ln in lines if ln and ln not in banned)
        for lines in page_lines
    ]


def sentence_spans(text: str) -> list[tuple[int, int]]:
    """Half-open character spans of the sentences in ``text``.

    A boundary is a '.', '!' or '?' followed by exactly one space and an
    uppercase letter or digit. A '.' does not end a sentence when the token
    before it is a known abbreviation or a single letter (initials).
    Trailing text without terminal punctuation forms a final sentence.
    """
    spans: list[tuple[int, int]] = []
    start = 0
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if (
            ch in _TERMINALS
            and i + 2 < n
            and text[i + 1] == " "
            and (text[i + 2].isupper() or text[i + 2].isdigit())
            and (ch != "." or not _is_abbreviation(text, i))
        ):
            spans.append((start, i + 1))
            start = i + 2
            i += 2
            continue
        i += 1
    if start < n:
        spans.append((start, n))
    return spans


def split_sentences(text: str) -> list[str]:
    """Sentences of a preprocessed (single-spaced) text, in order.

    Joining the result with single spaces reproduces the input exactly.
    """
    return [text[s:e] for s, e in sentence_spans(text)]


def _is_abbreviation(text: str, dot: int) -> bool:
    """True when the '.' at index ``dot`` ends an abbreviation or initial."""
    j = dot
    while j > 0 and text[j - 1].isalnum():
        j -= 1
    token = text[j:dot]
    if len(token) == 1 and token.isalpha():
        return True
    for abbr in ABBREVIATIONS:
        k = dot - len(abbr)
        if k >= 0 and text[k:dot] == abbr:
            if k == 0 or not text[k - 1].isalnum():
                return True
    return False


def chunk_sentences(
    sentences: list[str], target_words: int = DEFAULT_CHUNK_WORDS
) -> list[str]:
    """Greedily pack sentences into chunks of at most ``target_words`` words.

    Sentences are appended in order while the running word count stays
    within the budget; otherwise a new chunk starts. A single sentence
    longer than the budget becomes its own oversized chunk. Words are
    whitespace-delimited tokens.
    """
    if target_words < 1:
        raise ValueError("target_words must be >= 1")
    chunks: list[str] = []
    current: list[str] = []
    current_words = 0
    for sentence in sentences:
        words = len(sentence.split())
        if current and current_words + words > target_words:
            chunks.append(" ".join(current))
            current = []
            current_words = 0
        current.append(sentence)
        current_words += words
    if current:
        chunks.append(" ".join(current))
    return chunks
