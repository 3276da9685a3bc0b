"""arXiv metadata API client (Atom feed over HTTP).

API documentation: https://info.arxiv.org/help/api/index.html
No authentication required; published etiquette asks for at most one
request every 3 seconds, which the client enforces between its own calls.
"""

import time
import xml.etree.ElementTree as ET
from dataclasses import dataclass, field
from datetime import date
from urllib.parse import urlparse

import requests

from .errors import FeedParseError, TransportError

API_URL = "http://export.arxiv.org/api/query"

_NS = {
    "atom": "http://www.w3.org/2005/Atom",
    "arxiv": "http://arxiv.org/schemas/atom",
}

MAX_PAGE_SIZE = 100


@dataclass
class RawArticle:
    """Metadata and extracted text of one fetched article."""

    source_id: str
    title: str
    authors: list[str]
    published: date
    category: str
    abstract: str
    link: str
    body_text: str = ""
    page_texts: list[str] = field(default_factory=list)


class ArxivClient:
    """Client for the arXiv query endpoint with paging and rate limiting."""

    def __init__(
        self,
        base_url: str = API_URL,
        request_delay: float = 3.0,
        page_size: int = MAX_PAGE_SIZE,
        timeout: float = 30.0,
        session: requests.Session | None = None,
    ):
        self.base_url = base_url
        self.request_delay = request_delay
        self.page_size = min(page_size, MAX_PAGE_SIZE)
        self.timeout = timeout
        self._session = session or requests.Session()
        self._last_request: float | None = None

    def fetch_articles(self, topic: str, max_articles: int) -> list[RawArticle]:
        """Up to ``max_articles`` articles matching the topic query.

        Order follows the API's relevance order. Zero results is not an
        error; duplicates are not removed here (ingestion deduplicates).
        """
        topic = topic.strip()
        if not topic:
            raise ValueError("topic must be non-empty")
        if max_articles < 1:
            raise ValueError("max_articles must be >= 1")

        articles: list[RawArticle] = []
        while len(articles) < max_articles:
            batch_size = min(self.page_size, max_articles - len(articles))
            payload = self._request(
                {
                    "search_query": f"all:{topic}",
                    "start": len(articles),
                    "max_results": batch_size,
                }
            )
            entries = _parse_feed(payload)
            articles.extend(entries)
            if len(entries) < batch_size:
                break
        return articles[:max_articles]

    def _request(self, params: dict) -> str:
        self._throttle()
        try:
            response = self._session.get(
                self.base_url, params=params, timeout=self.timeout
            )
        except requests.RequestException as exc:
            raise TransportError(f"arXiv API request failed: {exc}") from exc
        self._last_request = time.monotonic()
        if response.status_code != 200:
            raise TransportError(
                f"arXiv API returned HTTP {response.status_code}"
            )
        return response.text

    def _throttle(self) -> None:
        if self._last_request is None or self.request_delay <= 0:
            return
        elapsed = time.monotonic() - self._last_request
        remaining = self.request_delay - elapsed
        if remaining > 0:
            time.sleep(remaining)


def _parse_feed(payload: str) -> list[RawArticle]:
    try:
        root = ET.fromstring(payload)
    except ET.ParseError as exc:
        raise FeedParseError(
            f"unparsable Atom feed: {exc}", payload_excerpt=payload[:200]
        ) from exc
    articles = []
    for entry in root.findall("atom:entry", _NS):
        articles.append(_parse_entry(entry, payload))
    return articles


def _parse_entry(entry: ET.Element, payload: str) -> RawArticle:
    def text_of(tag: str) -> str:
        node = entry.find(tag, _NS)
        if node is None or node.text is None:
            raise FeedParseError(
                f"feed entry is missing <{tag}>", payload_excerpt=payload[:200]
            )
        return " ".join(node.text.split())

    source_id = text_of("atom:id")
    title = text_of("atom:title")
    published_raw = text_of("atom:published")
    try:
        published = date.fromisoformat(published_raw[:10])
    except ValueError as exc:
        raise FeedParseError(
            f"bad published date {published_raw!r}", payload_excerpt=payload[:200]
        ) from exc

    category_node = entry.find("arxiv:primary_category", _NS)
    if category_node is None or not category_node.get("term"):
        raise FeedParseError(
            "feed entry is missing a primary category",
            payload_excerpt=payload[:200],
        )

    authors = [
        " ".join(name.text.split())
        for name in entry.findall("atom:author/atom:name", _NS)
        if name.text
    ]

    link = source_id
    for link_node in entry.findall("atom:link", _NS):
        if link_node.get("rel") == "alternate" and link_node.get("href"):
            link = link_node.get("href")
            break

    abstract_node = entry.find("atom:summary", _NS)
    abstract = ""
    if abstract_node is not None and abstract_node.text:
        abstract = abstract_node.text.strip()

    return RawArticle(
        source_id=source_id,
        title=title,
        authors=authors,
        published=published,
        category=category_node.get("term", ""),
        abstract=abstract,
        link=link,
        body_text=abstract,
    )
