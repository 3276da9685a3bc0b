"""Exception types shared across the package."""


class AskArxivError(Exception):
    """Base class for all package errors."""


class TransportError(AskArxivError):
    """Network or HTTP failure talking to the arXiv API. Retryable."""


class FeedParseError(AskArxivError):
    """The arXiv API returned a payload we could not parse.

    Carries an excerpt of the offending payload in ``payload_excerpt``.
    """

    def __init__(self, message: str, payload_excerpt: str = ""):
        super().__init__(message)
        self.payload_excerpt = payload_excerpt


class StoreError(AskArxivError):
    """Fatal document store failure (I/O, schema mismatch)."""


class DuplicateDocumentError(AskArxivError):
    """A document with the same source_id is already stored."""


class ChunkNotFoundError(AskArxivError):
    """A requested chunk id does not exist."""

    def __init__(self, chunk_id: int):
        super().__init__(f"unknown chunk id: {chunk_id}")
        self.chunk_id = chunk_id


class EmptyQueryError(AskArxivError):
    """The question tokenized to an empty term list."""


class ReaderUnavailableError(AskArxivError):
    """The remote reader service could not be reached."""


class IngestBusyError(AskArxivError):
    """An ingest job for the same topic is already queued or running."""


class JobNotFoundError(AskArxivError):
    """A polled ingest job id does not exist."""
