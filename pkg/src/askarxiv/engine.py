"""Pipeline facade wiring store, retriever, and reader together.

The engine owns immutable index snapshots (a global one plus an LRU of
per-category subindexes), selects the configured reader with automatic
fallback to the baseline, and runs ingestion jobs one at a time on a
background worker.
"""

import queue
import threading
import time
import uuid
from collections import OrderedDict
from dataclasses import dataclass, replace
from datetime import date

from . import ingest as ingest_mod
from .arxiv import ArxivClient
from .errors import IngestBusyError, JobNotFoundError, ReaderUnavailableError
from .ingest import IngestReport, TextExtractor
from .reader import AnswerCandidate, BaselineReader, ReaderRequest, RemoteReader
from .retriever import InvertedIndex, build_index, retrieve
from .store import DocumentStore

DEFAULT_K = 10
MAX_K = 100
DEFAULT_C = 3
MAX_C = 20

CATEGORY_INDEX_CACHE = 4


@dataclass(frozen=True)
class SearchRequest:
    question: str
    k: int = DEFAULT_K
    c: int = DEFAULT_C
    category: str | None = None

    def __post_init__(self):
        if not 1 <= self.k <= MAX_K:
            raise ValueError(f"k must be in [1, {MAX_K}]")
        if not 1 <= self.c <= MAX_C:
            raise ValueError(f"c must be in [1, {MAX_C}]")


@dataclass(frozen=True)
class SearchAnswer:
    """An answer candidate joined with its document's metadata."""

    chunk_id: int
    start: int
    end: int
    text: str
    confidence: float
    context: str
    title: str
    authors: tuple[str, ...]
    published: date
    category: str
    link: str


@dataclass(frozen=True)
class SearchResponse:
    answers: list[SearchAnswer]
    retrieved_chunk_count: int
    timing_ms: dict[str, float]
    degraded: bool = False


@dataclass
class IngestJob:
    job_id: str
    topic: str
    max_articles: int
    status: str = "queued"  # queued -> running -> done | failed
    report: IngestReport | None = None
    error: str | None = None


class SearchEngine:
    def __init__(
        self,
        store: DocumentStore,
        reader: str = "baseline",
        arxiv_client: ArxivClient | None = None,
        extractor: TextExtractor | None = None,
    ):
        self._store = store
        self._reader_spec = reader
        self._remote_reader = None
        if reader.startswith("remote:"):
            self._remote_reader = RemoteReader(reader[len("remote:") :])
        elif reader != "baseline":
            raise ValueError(f"unknown reader spec: {reader!r}")
        self._arxiv = arxiv_client or ArxivClient()
        self._extractor = extractor
        self._index_lock = threading.Lock()
        self._global_index: InvertedIndex | None = None
        self._category_indexes: OrderedDict[str, InvertedIndex] = OrderedDict()
        self._jobs = _JobRunner(self.ingest_topic)

    # ------------------------------------------------------------------
    # indexes

    def refresh_index(self) -> None:
        """Rebuild the global snapshot and drop cached category subindexes."""
        index = build_index(self._store.iterate_chunks())
        with self._index_lock:
            self._global_index = index
            self._category_indexes.clear()

    def _index_for(self, category: str | None) -> InvertedIndex:
        with self._index_lock:
            if category is None:
                if self._global_index is None:
                    self._global_index = build_index(self._store.iterate_chunks())
                return self._global_index
            if category in self._category_indexes:
                self._category_indexes.move_to_end(category)
                return self._category_indexes[category]
        index = build_index(self._store.iterate_chunks(category))
        with self._index_lock:
            self._category_indexes[category] = index
            self._category_indexes.move_to_end(category)
            while len(self._category_indexes) > CATEGORY_INDEX_CACHE:
                self._category_indexes.popitem(last=False)
        return index

    # ------------------------------------------------------------------
    # question answering

    def answer_question(self, request: SearchRequest) -> SearchResponse:
        timing: dict[str, float] = {}
        start_total = time.perf_counter()

        start = time.perf_counter()
        index = self._index_for(request.category)
        scored = retrieve(request.question, request.k, index)
        timing["retrieve"] = (time.perf_counter() - start) * 1000.0

        degraded = False
        answers: list[SearchAnswer] = []
        if scored:
            pairs = self._store.get_chunks([s.chunk_id for s in scored])
            reader_request = ReaderRequest(
                question=request.question,
                chunks=[(chunk.chunk_id, chunk.text) for chunk, _ in pairs],
                top_c=request.c,
            )
            start = time.perf_counter()
            candidates, degraded = self._read(reader_request, index)
            timing["read"] = (time.perf_counter() - start) * 1000.0

            docs_by_chunk = {chunk.chunk_id: doc for chunk, doc in pairs}
            answers = [
                _join_metadata(c, docs_by_chunk[c.chunk_id]) for c in candidates
            ]
        else:
            timing["read"] = 0.0

        timing["total"] = (time.perf_counter() - start_total) * 1000.0
        return SearchResponse(
            answers=answers,
            retrieved_chunk_count=len(scored),
            timing_ms=timing,
            degraded=degraded,
        )

    def _read(
        self, request: ReaderRequest, index: InvertedIndex
    ) -> tuple[list[AnswerCandidate], bool]:
        if self._remote_reader is not None:
            try:
                return self._remote_reader.extract_answers(request), False
            except ReaderUnavailableError:
                return (
                    BaselineReader(index.idf).extract_answers(request),
                    True,
                )
        return BaselineReader(index.idf).extract_answers(request), False

    # ------------------------------------------------------------------
    # corpus management

    def summary(self):
        return self._store.get_summary()

    def ingest_topic(self, topic: str, max_articles: int) -> IngestReport:
        """Synchronous ingest of one topic followed by an index refresh."""
        report = ingest_mod.ingest_topic(
            topic,
            max_articles,
            client=self._arxiv,
            store=self._store,
            extractor=self._extractor,
        )
        self.refresh_index()
        return report

    def start_ingest(self, topic: str, max_articles: int) -> str:
        """Queue an asynchronous ingest job; returns its job id."""
        if max_articles < 1:
            raise ValueError("max_articles must be >= 1")
        if not topic.strip():
            raise ValueError("topic must be non-empty")
        return self._jobs.submit(topic, max_articles)

    def get_job(self, job_id: str) -> IngestJob:
        return self._jobs.get(job_id)


def _join_metadata(candidate: AnswerCandidate, doc) -> SearchAnswer:
    return SearchAnswer(
        chunk_id=candidate.chunk_id,
        start=candidate.start,
        end=candidate.end,
        text=candidate.answer_text,
        confidence=candidate.confidence,
        context=candidate.context,
        title=doc.title,
        authors=doc.authors,
        published=doc.published,
        category=doc.category,
        link=doc.link,
    )


class _JobRunner:
    """Single-worker job queue; one ingest executes at a time."""

    def __init__(self, runner):
        self._runner = runner
        self._lock = threading.Lock()
        self._jobs: dict[str, IngestJob] = {}
        self._queue: queue.Queue[str] = queue.Queue()
        self._worker: threading.Thread | None = None

    def submit(self, topic: str, max_articles: int) -> str:
        with self._lock:
            for job in self._jobs.values():
                if job.topic == topic and job.status in ("queued", "running"):
                    raise IngestBusyError(
                        f"an ingest for topic {topic!r} is already {job.status}"
                    )
            job = IngestJob(
                job_id=uuid.uuid4().hex[:12], topic=topic, max_articles=max_articles
            )
            self._jobs[job.job_id] = job
            self._queue.put(job.job_id)
            if self._worker is None or not self._worker.is_alive():
                self._worker = threading.Thread(
                    target=self._run, name="askarxiv-ingest", daemon=True
                )
                self._worker.start()
        return job.job_id

    def get(self, job_id: str) -> IngestJob:
        with self._lock:
            job = self._jobs.get(job_id)
            if job is None:
                raise JobNotFoundError(f"unknown job id: {job_id}")
            return replace(job)

    def _run(self) -> None:
        while True:
            try:
                job_id = self._queue.get(timeout=1.0)
            except queue.Empty:
                return
            with self._lock:
                job = self._jobs[job_id]
                job.status = "running"
            try:
                report = self._runner(job.topic, job.max_articles)
            except Exception as exc:
                with self._lock:
                    job.status = "failed"
                    job.error = str(exc)
            else:
                with self._lock:
                    job.status = "done"
                    job.report = report
            finally:
                self._queue.task_done()
