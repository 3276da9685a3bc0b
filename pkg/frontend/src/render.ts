// Pure HTML renderers. Every number and string shown comes straight from
// an API response field; nothing is invented client-side, which keeps
// these functions snapshot-testable without a DOM.

import type { Answer, CorpusSummary, JobStatus, SearchResponse } from "./types.js";

// The API's context field is the answer plus up to this many characters on
// each side, clipped to the chunk. That published contract lets the
// highlight position be derived from the offsets alone: the answer starts
// at min(start, CONTEXT_CHARS) within the context. No string search.
export const CONTEXT_CHARS = 200;

export function escapeHtml(text: string): string {
    return text
        .replace(/&/g, "&amp;")
        .replace(/</g, "&lt;")
        .replace(/>/g, "&gt;")
        .replace(/"/g, "&quot;")
        .replace(/'/g, "&#39;");
}

// API offsets count Unicode code points (server-side string indexing),
// while JS String.slice counts UTF-16 code units; slicing by code points
// keeps highlights correct when astral characters appear.
export function codePointSlice(text: string, start: number, end?: number): string {
    return Array.from(text).slice(start, end).join("");
}

export function highlightContext(answer: Answer): string {
    const offset = Math.min(answer.start, CONTEXT_CHARS);
    const length = answer.end - answer.start;
    const before = codePointSlice(answer.context, 0, offset);
    const marked = codePointSlice(answer.context, offset, offset + length);
    const after = codePointSlice(answer.context, offset + length);
    return `${escapeHtml(before)}<mark>${escapeHtml(marked)}</mark>${escapeHtml(after)}`;
}

export function renderAnswerCard(answer: Answer, rank: number): string {
    const authors = answer.authors.map(escapeHtml).join(", ");
    return [
        `<article class="answer-card" data-rank="${rank}">`,
        `  <div class="answer-confidence">${answer.confidence.toFixed(3)}</div>`,
        `  <blockquote class="answer-context">${highlightContext(answer)}</blockquote>`,
        `  <div class="answer-meta">`,
        `    <span class="answer-title">${escapeHtml(answer.title)}</span>`,
        `    <span class="answer-authors">${authors}</span>`,
        `    <span class="answer-date">${escapeHtml(answer.published)}</span>`,
        `    <span class="answer-category">${escapeHtml(answer.category)}</span>`,
        `    <a class="answer-link" href="${escapeHtml(answer.link)}">source</a>`,
        `  </div>`,
        `</article>`,
    ].join("\n");
}

export function renderSearchResults(response: SearchResponse): string {
    const badge = response.degraded
        ? `<div class="degraded-badge">baseline reader</div>`
        : "";
    if (response.answers.length === 0) {
        return `${badge}<p class="no-results">No answers found (retrieved ${response.retrieved_chunk_count} chunks).</p>`;
    }
    const cards = response.answers
        .map((answer, index) => renderAnswerCard(answer, index + 1))
        .join("\n");
    return `${badge}<div class="results" data-retrieved="${response.retrieved_chunk_count}">\n${cards}\n</div>`;
}

export function renderSummary(summary: CorpusSummary): string {
    const rows = Object.entries(summary.category_counts)
        .sort(([a], [b]) => (a < b ? -1 : a > b ? 1 : 0))
        .map(
            ([category, count]) =>
                `    <li><span class="cat-name">${escapeHtml(category)}</span> <span class="cat-count">${count}</span></li>`,
        )
        .join("\n");
    return [
        `<dl class="summary">`,
        `  <dt>Articles</dt><dd class="summary-articles">${summary.article_count}</dd>`,
        `  <dt>Search chunks</dt><dd class="summary-chunks">${summary.chunk_count}</dd>`,
        `  <dt>Categories</dt><dd class="summary-categories">${Object.keys(summary.category_counts).length}</dd>`,
        `</dl>`,
        `<ul class="category-list">`,
        rows,
        `</ul>`,
    ].join("\n");
}

export function renderJobStatus(job: JobStatus): string {
    const lines = [
        `<div class="job" data-status="${escapeHtml(job.status)}">`,
        `  <span class="job-id">${escapeHtml(job.job_id)}</span>`,
        `  <span class="job-state">${escapeHtml(job.status)}</span>`,
    ];
    if (job.report) {
        lines.push(
            `  <span class="job-report">fetched ${job.report.fetched}, ` +
                `ingested ${job.report.ingested}, ` +
                `duplicates ${job.report.duplicates}, ` +
                `corrupted ${job.report.corrupted}</span>`,
        );
    }
    if (job.error) {
        lines.push(`  <span class="job-error">${escapeHtml(job.error)}</span>`);
    }
    lines.push(`</div>`);
    return lines.join("\n");
}

export function renderErrorBanner(message: string): string {
    return `<div class="error-banner" role="alert">${escapeHtml(message)}</div>`;
}
