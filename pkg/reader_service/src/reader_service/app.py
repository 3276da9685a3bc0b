"""HTTP app implementing the reader wire protocol.

POST /read with {"question", "top_c", "chunks": [{"chunk_id", "text"}]}
answers {"answers": [{"chunk_id", "start", "end", "text", "confidence"}]}
where offsets are character offsets into the supplied chunk text. The
backend is any object with best_spans(question, text, top_n); confidences
are the backend's span scores normalized over the request's candidates.
"""

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

MAX_SPANS_PER_CHUNK = 2


class ChunkBody(BaseModel):
    chunk_id: int
    text: str


class ReadBody(BaseModel):
    question: str
    top_c: int = Field(ge=1)
    chunks: list[ChunkBody] = Field(min_length=1)


def create_app(backend) -> FastAPI:
    app = FastAPI(title="reader-service", version="0.1.0")

    @app.get("/healthz")
    def healthz():
        return {
            "status": "ok",
            "model": getattr(backend, "model_name", "unknown"),
        }

    @app.post("/read")
    def read(body: ReadBody):
        if not body.question.strip():
            raise HTTPException(status_code=400, detail="question is empty")

        collected = []
        for chunk in body.chunks:
            if not chunk.text:
                continue
            for span in backend.best_spans(
                body.question, chunk.text, top_n=MAX_SPANS_PER_CHUNK
            ):
                collected.append((chunk.chunk_id, chunk.text, span))

        total = sum(span.score for _, _, span in collected)
        answers = [
            {
                "chunk_id": chunk_id,
                "start": span.start,
                "end": span.end,
                "text": text[span.start : span.end],
                "confidence": span.score / total if total > 0 else 0.0,
            }
            for chunk_id, text, span in collected
        ]
        answers.sort(key=lambda a: (-a["confidence"], a["chunk_id"], a["start"]))
        return {"answers": answers[: body.top_c]}

    return app
