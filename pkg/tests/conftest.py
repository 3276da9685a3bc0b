"""Shared fixtures: canned arXiv feeds, fake transports, seeded corpora."""

import sys
from datetime import date

import pytest


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    """Print one pass/fail line per acceptance criterion, uncaptured."""
    outcome = yield
    report = outcome.get_result()
    if report.when == "call" and item.module.__name__ == "test_acceptance":
        status = "PASS" if report.passed else "FAIL"
        print(f"[{status}] {item.name}", file=sys.__stderr__)

from askarxiv.arxiv import ArxivClient, RawArticle
from askarxiv.engine import SearchEngine
from askarxiv.store import Document, DocumentStore, SearchChunk

ATOM_NS = "http://www.w3.org/2005/Atom"
ARXIV_NS = "http://arxiv.org/schemas/atom"


def atom_feed(entries: list[dict]) -> str:
    """Build an Atom feed string shaped like a real arXiv API response."""
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<feed xmlns="{ATOM_NS}" xmlns:arxiv="{ARXIV_NS}">',
        "  <title>ArXiv Query</title>",
    ]
    for e in entries:
        authors = "".join(
            f"<author><name>{name}</name></author>"
            for name in e.get("authors", ["Jane Roe"])
        )
        parts.append(
            "  <entry>"
            f"<id>{e['id']}</id>"
            f"<published>{e.get('published', '2021-01-04T00:00:00Z')}</published>"
            f"<title>{e.get('title', 'Sample Title')}</title>"
            f"<summary>{e.get('summary', 'An abstract.')}</summary>"
            f"{authors}"
            f'<arxiv:primary_category term="{e.get("category", "cs.CR")}"/>'
            f'<link href="{e.get("link", e["id"])}" rel="alternate" type="text/html"/>'
            "</entry>"
        )
    parts.append("</feed>")
    return "\n".join(parts)


class FakeResponse:
    def __init__(self, text: str = "", status_code: int = 200, payload=None):
        self.text = text
        self.status_code = status_code
        self._payload = payload

    def json(self):
        if self._payload is None:
            raise ValueError("response has no JSON body")
        return self._payload


class FakeSession:
    """Stand-in for requests.Session; replays queued responses."""

    def __init__(self, responses):
        self._responses = list(responses)
        self.requests: list[dict] = []

    def get(self, url, params=None, timeout=None):
        self.requests.append({"url": url, "params": dict(params or {})})
        if not self._responses:
            raise AssertionError("fake session ran out of responses")
        item = self._responses.pop(0)
        if isinstance(item, Exception):
            raise item
        return item


class FakeArxivClient:
    """ArxivClient substitute returning canned RawArticle batches."""

    def __init__(self, articles: list[RawArticle]):
        self.articles = articles
        self.calls: list[tuple[str, int]] = []

    def fetch_articles(self, topic: str, max_articles: int) -> list[RawArticle]:
        self.calls.append((topic, max_articles))
        return self.articles[:max_articles]


def make_article(
    source_id: str,
    abstract: str,
    category: str = "cs.CR",
    title: str = "Sample Title",
    page_texts: list[str] | None = None,
) -> RawArticle:
    return RawArticle(
        source_id=source_id,
        title=title,
        authors=["Jane Roe"],
        published=date(2021, 1, 4),
        category=category,
        abstract=abstract,
        link=f"http://arxiv.org/abs/{source_id}",
        body_text=abstract,
        page_texts=page_texts or [],
    )


def make_document(
    source_id: str,
    clean_text: str,
    category: str = "cs.CR",
    title: str = "Sample Title",
    status: str = "ingested",
) -> Document:
    return Document(
        source_id=source_id,
        title=title,
        authors=("Jane Roe",),
        published=date(2021, 1, 4),
        category=category,
        link=f"http://arxiv.org/abs/{source_id}",
        clean_text=clean_text,
        status=status,
    )


def chunks_for(texts: list[str]) -> list[SearchChunk]:
    return [
        SearchChunk(ordinal=i, text=t, word_count=len(t.split()))
        for i, t in enumerate(texts)
    ]


@pytest.fixture
def store(tmp_path) -> DocumentStore:
    s = DocumentStore(tmp_path / "corpus.db")
    yield s
    s.close()


@pytest.fixture
def rate_free_client() -> ArxivClient:
    return ArxivClient(request_delay=0.0, session=FakeSession([]))


def seeded_engine(tmp_path, docs_with_chunks, reader="baseline") -> SearchEngine:
    """Engine over a store preloaded with (Document, [chunk texts]) pairs."""
    store = DocumentStore(tmp_path / "seeded.db")
    for doc, texts in docs_with_chunks:
        store.put_document(doc, chunks_for(texts))
    engine = SearchEngine(
        store, reader=reader, arxiv_client=FakeArxivClient([])
    )
    engine.refresh_index()
    return engine
