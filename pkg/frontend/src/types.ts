// Shapes of the four askarxiv API endpoints.

export interface Answer {
    chunk_id: number;
    start: number;
    end: number;
    text: string;
    confidence: number;
    context: string;
    title: string;
    authors: string[];
    published: string;
    category: string;
    link: string;
}

export interface SearchResponse {
    answers: Answer[];
    retrieved_chunk_count: number;
    timing_ms: Record<string, number>;
    degraded: boolean;
}

export interface SearchRequest {
    question: string;
    k: number;
    c: number;
    category?: string;
}

export interface CorpusSummary {
    article_count: number;
    chunk_count: number;
    category_counts: Record<string, number>;
}

export type JobState = "queued" | "running" | "done" | "failed";

export interface IngestReport {
    fetched: number;
    ingested: number;
    duplicates: number;
    corrupted: number;
}

export interface JobStatus {
    job_id: string;
    status: JobState;
    report: IngestReport | null;
    error: string | null;
}
