"""SQLite-backed storage for documents, search chunks, and corpus summary."""

import json
import sqlite3
import threading
from dataclasses import dataclass
from datetime import date
from pathlib import Path
from typing import Iterator

from .errors import ChunkNotFoundError, DuplicateDocumentError, StoreError

SCHEMA_VERSION = 1

STATUS_INGESTED = "ingested"
STATUS_CORRUPTED = "corrupted"

_SCHEMA = """
CREATE TABLE IF NOT EXISTS documents (
    doc_id     INTEGER PRIMARY KEY AUTOINCREMENT,
    source_id  TEXT NOT NULL UNIQUE,
    title      TEXT NOT NULL,
    authors    TEXT NOT NULL,
    published  TEXT NOT NULL,
    category   TEXT NOT NULL,
    link       TEXT NOT NULL,
    clean_text TEXT NOT NULL,
    status     TEXT NOT NULL CHECK (status IN ('ingested', 'corrupted'))
);
CREATE TABLE IF NOT EXISTS chunks (
    chunk_id   INTEGER PRIMARY KEY AUTOINCREMENT,
    doc_id     INTEGER NOT NULL REFERENCES documents(doc_id),
    ordinal    INTEGER NOT NULL,
    text       TEXT NOT NULL,
    word_count INTEGER NOT NULL,
    UNIQUE (doc_id, ordinal)
);
CREATE INDEX IF NOT EXISTS chunks_by_doc ON chunks(doc_id);
"""


@dataclass(frozen=True)
class Document:
    """One scientific article; ``doc_id`` is assigned by the store."""

    source_id: str
    title: str
    authors: tuple[str, ...]
    published: date
    category: str
    link: str
    clean_text: str
    status: str = STATUS_INGESTED
    doc_id: int | None = None


@dataclass(frozen=True)
class SearchChunk:
    """An indexed passage; ids are assigned by the store."""

    ordinal: int
    text: str
    word_count: int
    chunk_id: int | None = None
    doc_id: int | None = None


@dataclass(frozen=True)
class CorpusSummary:
    article_count: int
    chunk_count: int
    category_counts: dict[str, int]


class DocumentStore:
    """Single-file embedded store with atomic per-document commits.

    One connection guarded by a lock serializes writers; readers never
    observe a partially committed document because every put happens in
    one transaction.
    """

    def __init__(self, path: str | Path):
        self._path = str(path)
        self._lock = threading.RLock()
        try:
            self._conn = sqlite3.connect(self._path, check_same_thread=False)
        except sqlite3.Error as exc:
            raise StoreError(f"cannot open store at {self._path}: {exc}") from exc
        self._conn.row_factory = sqlite3.Row
        self._init_schema()

    def _init_schema(self) -> None:
        with self._lock:
            version = self._conn.execute("PRAGMA user_version").fetchone()[0]
            if version == 0:
                with self._conn:
                    self._conn.executescript(_SCHEMA)
                    self._conn.execute(f"PRAGMA user_version = {SCHEMA_VERSION}")
            elif version != SCHEMA_VERSION:
                raise StoreError(
                    f"store schema version {version} is not supported "
                    f"(expected {SCHEMA_VERSION})"
                )

    def close(self) -> None:
        with self._lock:
            self._conn.close()

    def put_document(self, doc: Document, chunks: list[SearchChunk]) -> int:
        """Persist a document and its chunks atomically; returns the doc id."""
        _check_chunks(doc, chunks)
        with self._lock:
            try:
                with self._conn:
                    cursor = self._conn.execute(
                        "INSERT INTO documents (source_id, title, authors,"
                        " published, category, link, clean_text, status)"
                        " VALUES (?, ?, ?, ?, ?, ?, ?, ?)",
                        (
                            doc.source_id,
                            doc.title,
                            json.dumps(list(doc.authors)),
                            doc.published.isoformat(),
                            doc.category,
                            doc.link,
                            doc.clean_text,
                            doc.status,
                        ),
                    )
                    doc_id = cursor.lastrowid
                    self._conn.executemany(
                        "INSERT INTO chunks (doc_id, ordinal, text, word_count)"
                        " VALUES (?, ?, ?, ?)",
                        [(doc_id, c.ordinal, c.text, c.word_count) for c in chunks],
                    )
            except sqlite3.IntegrityError as exc:
                if "source_id" in str(exc):
                    raise DuplicateDocumentError(
                        f"source_id already stored: {doc.source_id}"
                    ) from exc
                raise StoreError(str(exc)) from exc
            except sqlite3.Error as exc:
                raise StoreError(str(exc)) from exc
            return doc_id

    def has_source(self, source_id: str) -> bool:
        with self._lock:
            row = self._query(
                "SELECT 1 FROM documents WHERE source_id = ?", (source_id,)
            ).fetchone()
            return row is not None

    def _query(self, sql: str, params: tuple = ()) -> sqlite3.Cursor:
        try:
            return self._conn.execute(sql, params)
        except sqlite3.Error as exc:
            raise StoreError(str(exc)) from exc

    def get_summary(self) -> CorpusSummary:
        """Counts of ingested articles, their chunks, and articles per category."""
        with self._lock:
            category_counts = {
                row["category"]: row["n"]
                for row in self._query(
                    "SELECT category, COUNT(*) AS n FROM documents"
                    " WHERE status = ? GROUP BY category ORDER BY category",
                    (STATUS_INGESTED,),
                )
            }
            chunk_count = self._query("SELECT COUNT(*) FROM chunks").fetchone()[0]
        return CorpusSummary(
            article_count=sum(category_counts.values()),
            chunk_count=chunk_count,
            category_counts=category_counts,
        )

    def get_chunks(
        self, chunk_ids: list[int]
    ) -> list[tuple[SearchChunk, Document]]:
        """Chunks with their documents, in the order the ids were given."""
        if not chunk_ids:
            return []
        placeholders = ",".join("?" for _ in chunk_ids)
        with self._lock:
            rows = self._query(
                "SELECT c.chunk_id, c.doc_id, c.ordinal, c.text, c.word_count,"
                " d.source_id, d.title, d.authors, d.published, d.category,"
                " d.link, d.clean_text, d.status"
                " FROM chunks c JOIN documents d ON d.doc_id = c.doc_id"
                f" WHERE c.chunk_id IN ({placeholders})",
                tuple(chunk_ids),
            ).fetchall()
        by_id = {row["chunk_id"]: row for row in rows}
        result = []
        for chunk_id in chunk_ids:
            row = by_id.get(chunk_id)
            if row is None:
                raise ChunkNotFoundError(chunk_id)
            result.append((_chunk_from_row(row), _doc_from_row(row)))
        return result

    def iterate_chunks(
        self, category_filter: str | None = None
    ) -> Iterator[SearchChunk]:
        """Yield every chunk (optionally only those in one category) once."""
        query = (
            "SELECT c.chunk_id, c.doc_id, c.ordinal, c.text, c.word_count"
            " FROM chunks c"
        )
        params: tuple = ()
        if category_filter is not None:
            query += (
                " JOIN documents d ON d.doc_id = c.doc_id WHERE d.category = ?"
            )
            params = (category_filter,)
        query += " ORDER BY c.chunk_id"
        with self._lock:
            rows = self._query(query, params).fetchall()
        for row in rows:
            yield _chunk_from_row(row)

    def get_document(self, doc_id: int) -> Document:
        with self._lock:
            row = self._query(
                "SELECT * FROM documents WHERE doc_id = ?", (doc_id,)
            ).fetchone()
        if row is None:
            raise StoreError(f"unknown doc id: {doc_id}")
        return _doc_from_row(row)


def _check_chunks(doc: Document, chunks: list[SearchChunk]) -> None:
    if doc.status == STATUS_CORRUPTED and chunks:
        raise ValueError("corrupted documents own zero chunks")
    for position, chunk in enumerate(chunks):
        if chunk.ordinal != position:
            raise ValueError(
                f"chunk ordinal {chunk.ordinal} at position {position}"
            )
        if chunk.word_count != len(chunk.text.split()):
            raise ValueError(f"word_count mismatch at ordinal {chunk.ordinal}")


def _chunk_from_row(row: sqlite3.Row) -> SearchChunk:
    return SearchChunk(
        chunk_id=row["chunk_id"],
        doc_id=row["doc_id"],
        ordinal=row["ordinal"],
        text=row["text"],
        word_count=row["word_count"],
    )


def _doc_from_row(row: sqlite3.Row) -> Document:
    return Document(
        doc_id=row["doc_id"],
        source_id=row["source_id"],
        title=row["title"],
        authors=tuple(json.loads(row["authors"])),
        published=date.fromisoformat(row["published"]),
        category=row["category"],
        link=row["link"],
        clean_text=row["clean_text"],
        status=row["status"],
    )
