// DOM wiring: navigation between the search and database views, sliders,
// question submission, and topic ingestion with job polling. Slider moves
// only update labels and state; network traffic happens on explicit
// submits alone.

import { ApiClient, BusyError } from "./api.js";
import {
    renderErrorBanner,
    renderJobStatus,
    renderSearchResults,
    renderSummary,
} from "./render.js";
import {
    clampC,
    clampK,
    initialState,
    validateIngestForm,
    type View,
} from "./state.js";

const api = new ApiClient("");
const state = initialState();

function el<T extends HTMLElement>(id: string): T {
    const node = document.getElementById(id);
    if (!node) throw new Error(`missing element #${id}`);
    return node as T;
}

function showView(view: View): void {
    state.view = view;
    el("view-search").hidden = view !== "search";
    el("view-database").hidden = view !== "database";
    el("nav-search").classList.toggle("active", view === "search");
    el("nav-database").classList.toggle("active", view === "database");
}

async function refreshSummary(): Promise<void> {
    try {
        state.summary = await api.summary();
        el("summary-panel").innerHTML = renderSummary(state.summary);
        const select = el<HTMLSelectElement>("category-select");
        const previous = state.category ?? "";
        select.innerHTML =
            `<option value="">all categories</option>` +
            Object.keys(state.summary.category_counts)
                .sort()
                .map((c) => `<option value="${c}">${c}</option>`)
                .join("");
        select.value = previous;
    } catch (error) {
        el("summary-panel").innerHTML = renderErrorBanner(String(error));
    }
}

async function submitQuestion(): Promise<void> {
    const question = el<HTMLInputElement>("question-input").value;
    const results = el("search-results");
    if (!question.trim()) {
        results.innerHTML = renderErrorBanner("Type a question first.");
        return;
    }
    results.innerHTML = `<p class="loading">Searching…</p>`;
    try {
        const response = await api.search({
            question,
            k: state.k,
            c: state.c,
            category: state.category ?? undefined,
        });
        results.innerHTML = renderSearchResults(response);
    } catch (error) {
        results.innerHTML = renderErrorBanner(String(error));
    }
}

async function submitIngest(): Promise<void> {
    const topic = el<HTMLInputElement>("ingest-topic").value;
    const max = Number(el<HTMLInputElement>("ingest-max").value);
    const status = el("ingest-status");
    const button = el<HTMLButtonElement>("ingest-submit");

    const check = validateIngestForm(topic, max);
    if (!check.ok) {
        status.innerHTML = renderErrorBanner(check.message ?? "Invalid form.");
        return;
    }
    button.disabled = true;
    try {
        const jobId = await api.startIngest(topic.trim(), max);
        const job = await api.pollJob(jobId, 750, (update) => {
            status.innerHTML = renderJobStatus(update);
        });
        status.innerHTML = renderJobStatus(job);
        await refreshSummary();
    } catch (error) {
        if (error instanceof BusyError) {
            status.innerHTML = renderErrorBanner(
                `An ingest for this topic is already running: ${error.message}`,
            );
        } else {
            status.innerHTML = renderErrorBanner(String(error));
        }
    } finally {
        button.disabled = false;
    }
}

function wireSlider(
    sliderId: string,
    labelId: string,
    clamp: (v: number) => number,
    assign: (v: number) => void,
): void {
    const slider = el<HTMLInputElement>(sliderId);
    const label = el(labelId);
    slider.addEventListener("input", () => {
        const value = clamp(Number(slider.value));
        assign(value);
        label.textContent = String(value);
    });
}

export function boot(): void {
    el("nav-search").addEventListener("click", () => showView("search"));
    el("nav-database").addEventListener("click", () => showView("database"));

    wireSlider("k-slider", "k-value", clampK, (v) => (state.k = v));
    wireSlider("c-slider", "c-value", clampC, (v) => (state.c = v));
    el<HTMLSelectElement>("category-select").addEventListener("change", (e) => {
        const value = (e.target as HTMLSelectElement).value;
        state.category = value === "" ? null : value;
    });

    el<HTMLFormElement>("search-form").addEventListener("submit", (e) => {
        e.preventDefault();
        void submitQuestion();
    });
    el<HTMLFormElement>("ingest-form").addEventListener("submit", (e) => {
        e.preventDefault();
        void submitIngest();
    });

    showView("search");
    void refreshSummary();
}

if (typeof document !== "undefined" && document.getElementById("nav-search")) {
    boot();
}
