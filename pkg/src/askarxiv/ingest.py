"""Topic ingestion: fetch articles, clean them, chunk them, persist them."""

import logging
from dataclasses import dataclass
from typing import Callable

from .arxiv import ArxivClient
from .errors import DuplicateDocumentError
from .store import (
    Document,
    DocumentStore,
    SearchChunk,
    STATUS_CORRUPTED,
    STATUS_INGESTED,
)
from .textprep import chunk_sentences, preprocess, split_sentences

logger = logging.getLogger(__name__)

# Optional full-text hook: maps an article link to per-page extracted text.
# Without one, ingestion works from the abstract alone.
TextExtractor = Callable[[str], list[str]]


@dataclass(frozen=True)
class IngestReport:
    fetched: int
    ingested: int
    duplicates: int
    corrupted: int


def ingest_topic(
    topic: str,
    max_articles: int,
    client: ArxivClient,
    store: DocumentStore,
    extractor: TextExtractor | None = None,
) -> IngestReport:
    """Fetch, deduplicate, preprocess, chunk, and persist one topic batch.

    Each article commits atomically; an extraction failure marks that
    article corrupted and the batch continues. Always:
    fetched == ingested + duplicates + corrupted.
    """
    articles = client.fetch_articles(topic, max_articles)
    ingested = duplicates = corrupted = 0
    seen: set[str] = set()

    for article in articles:
        if article.source_id in seen or store.has_source(article.source_id):
            duplicates += 1
            continue
        seen.add(article.source_id)

        page_texts = article.page_texts
        extraction_failed = False
        if extractor is not None:
            try:
                page_texts = extractor(article.link)
            except Exception:
                logger.warning(
                    "full-text extraction failed for %s", article.link,
                    exc_info=True,
                )
                extraction_failed = True

        clean_text = (
            "" if extraction_failed else preprocess(article.body_text, page_texts)
        )
        status = STATUS_INGESTED if clean_text else STATUS_CORRUPTED
        doc = Document(
            source_id=article.source_id,
            title=article.title,
            authors=tuple(article.authors),
            published=article.published,
            category=article.category,
            link=article.link,
            clean_text=clean_text,
            status=status,
        )
        chunks = []
        if clean_text:
            chunks = [
                SearchChunk(ordinal=i, text=text, word_count=len(text.split()))
                for i, text in enumerate(chunk_sentences(split_sentences(clean_text)))
            ]
        try:
            store.put_document(doc, chunks)
        except DuplicateDocumentError:
            duplicates += 1
            continue
        if status == STATUS_CORRUPTED:
            corrupted += 1
        else:
            ingested += 1

    return IngestReport(
        fetched=len(articles),
        ingested=ingested,
        duplicates=duplicates,
        corrupted=corrupted,
    )
