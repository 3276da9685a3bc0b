"""Retriever-reader question answering over arXiv publications.

Articles fetched from the arXiv metadata API are cleaned, split into
sentence-respecting chunks of at most 500 words, and stored with their
metadata in an embedded database. Questions are answered by a TF-IDF
retriever that narrows the corpus to the k most relevant chunks, followed
by an extractive reader that pulls the best c answer spans out of them.
"""

from .arxiv import ArxivClient, RawArticle
from .engine import (
    IngestJob,
    SearchAnswer,
    SearchEngine,
    SearchRequest,
    SearchResponse,
)
from .errors import (
    AskArxivError,
    ChunkNotFoundError,
    DuplicateDocumentError,
    EmptyQueryError,
    FeedParseError,
    IngestBusyError,
    JobNotFoundError,
    ReaderUnavailableError,
    StoreError,
    TransportError,
)
from .ingest import IngestReport, ingest_topic
from .reader import (
    AnswerCandidate,
    BaselineReader,
    ReaderRequest,
    RemoteReader,
    score_window,
)
from .retriever import (
    InvertedIndex,
    Posting,
    ScoredChunk,
    build_index,
    retrieve,
    tfidf_weight,
    tokenize,
)
from .store import CorpusSummary, Document, DocumentStore, SearchChunk
from .textprep import chunk_sentences, preprocess, split_sentences

__version__ = "0.1.0"

__all__ = [
    "AnswerCandidate",
    "ArxivClient",
    "AskArxivError",
    "BaselineReader",
    "ChunkNotFoundError",
    "CorpusSummary",
    "Document",
    "DocumentStore",
    "DuplicateDocumentError",
    "EmptyQueryError",
    "FeedParseError",
    "IngestBusyError",
    "IngestJob",
    "IngestReport",
    "InvertedIndex",
    "JobNotFoundError",
    "Posting",
    "RawArticle",
    "ReaderRequest",
    "ReaderUnavailableError",
    "RemoteReader",
    "ScoredChunk",
    "SearchAnswer",
    "SearchChunk",
    "SearchEngine",
    "SearchRequest",
    "SearchResponse",
    "StoreError",
    "TransportError",
    "build_index",
    "chunk_sentences",
    "ingest_topic",
    "preprocess",
    "retrieve",
    "score_window",
    "split_sentences",
    "tfidf_weight",
    "tokenize",
]
