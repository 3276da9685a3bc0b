"""HTTP API exposing ingestion, corpus summary, and question answering."""

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from .engine import MAX_C, MAX_K, SearchEngine, SearchRequest
from .errors import EmptyQueryError, IngestBusyError, JobNotFoundError


class SearchBody(BaseModel):
    question: str
    k: int = Field(default=10, ge=1, le=MAX_K)
    c: int = Field(default=3, ge=1, le=MAX_C)
    category: str | None = None


class IngestBody(BaseModel):
    topic: str = Field(min_length=1)
    max_articles: int = Field(ge=1)


def create_app(engine: SearchEngine) -> FastAPI:
    app = FastAPI(title="askarxiv", version="0.1.0")

    @app.post("/api/search")
    def search(body: SearchBody):
        try:
            response = engine.answer_question(
                SearchRequest(
                    question=body.question,
                    k=body.k,
                    c=body.c,
                    category=body.category,
                )
            )
        except EmptyQueryError as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        return {
            "answers": [
                {
                    "chunk_id": a.chunk_id,
                    "start": a.start,
                    "end": a.end,
                    "text": a.text,
                    "confidence": a.confidence,
                    "context": a.context,
                    "title": a.title,
                    "authors": list(a.authors),
                    "published": a.published.isoformat(),
                    "category": a.category,
                    "link": a.link,
                }
                for a in response.answers
            ],
            "retrieved_chunk_count": response.retrieved_chunk_count,
            "timing_ms": response.timing_ms,
            "degraded": response.degraded,
        }

    @app.get("/api/summary")
    def summary():
        s = engine.summary()
        return {
            "article_count": s.article_count,
            "chunk_count": s.chunk_count,
            "category_counts": s.category_counts,
        }

    @app.post("/api/ingest", status_code=202)
    def start_ingest(body: IngestBody):
        try:
            job_id = engine.start_ingest(body.topic, body.max_articles)
        except IngestBusyError as exc:
            raise HTTPException(status_code=409, detail=str(exc))
        except ValueError as exc:
            raise HTTPException(status_code=422, detail=str(exc))
        return {"job_id": job_id}

    @app.get("/api/ingest/{job_id}")
    def poll_ingest(job_id: str):
        try:
            job = engine.get_job(job_id)
        except JobNotFoundError as exc:
            raise HTTPException(status_code=404, detail=str(exc))
        report = None
        if job.report is not None:
            report = {
                "fetched": job.report.fetched,
                "ingested": job.report.ingested,
                "duplicates": job.report.duplicates,
                "corrupted": job.report.corrupted,
            }
        return {
            "job_id": job.job_id,
            "status": job.status,
            "report": report,
            "error": job.error,
        }

    return app
