// Thin client for the askarxiv HTTP API. The fetch function is injectable
// so tests can mock the network entirely.

import type {
    CorpusSummary,
    JobStatus,
    SearchRequest,
    SearchResponse,
} from "./types.js";

export class ApiError extends Error {
    constructor(message: string, public status: number) {
        super(message);
    }
}

export class BusyError extends ApiError {}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

async function detailOf(response: Response): Promise<string> {
    try {
        const body = await response.json();
        if (typeof body.detail === "string") return body.detail;
        return JSON.stringify(body.detail ?? body);
    } catch {
        return response.statusText || `HTTP ${response.status}`;
    }
}

export class ApiClient {
    constructor(
        private baseUrl: string = "",
        private fetchFn: FetchLike = (input, init) => fetch(input, init),
    ) {}

    private async request(path: string, init?: RequestInit): Promise<Response> {
        const response = await this.fetchFn(`${this.baseUrl}${path}`, init);
        if (response.status === 409) {
            throw new BusyError(await detailOf(response), response.status);
        }
        if (!response.ok) {
            throw new ApiError(await detailOf(response), response.status);
        }
        return response;
    }

    async search(request: SearchRequest): Promise<SearchResponse> {
        const body: Record<string, unknown> = {
            question: request.question,
            k: request.k,
            c: request.c,
        };
        if (request.category) body.category = request.category;
        const response = await this.request("/api/search", {
            method: "POST",
            headers: { "Content-Type": "application/json" },
            body: JSON.stringify(body),
        });
        return response.json();
    }

    async summary(): Promise<CorpusSummary> {
        const response = await this.request("/api/summary");
        return response.json();
    }

    async startIngest(topic: string, maxArticles: number): Promise<string> {
        const response = await this.request("/api/ingest", {
            method: "POST",
            headers: { "Content-Type": "application/json" },
            body: JSON.stringify({ topic, max_articles: maxArticles }),
        });
        const body = await response.json();
        return body.job_id;
    }

    async getJob(jobId: string): Promise<JobStatus> {
        const response = await this.request(
            `/api/ingest/${encodeURIComponent(jobId)}`,
        );
        return response.json();
    }

    /** Poll until the job reaches done or failed; reports every status seen. */
    async pollJob(
        jobId: string,
        intervalMs = 500,
        onUpdate?: (job: JobStatus) => void,
        sleep: (ms: number) => Promise<void> = (ms) =>
            new Promise((resolve) => setTimeout(resolve, ms)),
    ): Promise<JobStatus> {
        for (;;) {
            const job = await this.getJob(jobId);
            onUpdate?.(job);
            if (job.status === "done" || job.status === "failed") {
                return job;
            }
            await sleep(intervalMs);
        }
    }
}
