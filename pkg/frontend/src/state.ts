// Dashboard state and the API's parameter bounds.

import type { CorpusSummary } from "./types.js";

export const K_MIN = 1;
export const K_MAX = 100;
export const K_DEFAULT = 10;
export const C_MIN = 1;
export const C_MAX = 20;
export const C_DEFAULT = 3;
export const INGEST_MAX_MIN = 1;
export const INGEST_MAX_LIMIT = 500;

export type View = "search" | "database";

export interface DashboardState {
    summary: CorpusSummary | null;
    k: number;
    c: number;
    category: string | null;
    view: View;
}

export function initialState(): DashboardState {
    return {
        summary: null,
        k: K_DEFAULT,
        c: C_DEFAULT,
        category: null,
        view: "search",
    };
}

function clamp(value: number, min: number, max: number): number {
    if (Number.isNaN(value)) return min;
    return Math.min(max, Math.max(min, Math.round(value)));
}

export function clampK(value: number): number {
    return clamp(value, K_MIN, K_MAX);
}

export function clampC(value: number): number {
    return clamp(value, C_MIN, C_MAX);
}

export interface IngestFormCheck {
    ok: boolean;
    message?: string;
}

export function validateIngestForm(topic: string, max: number): IngestFormCheck {
    if (!topic.trim()) {
        return { ok: false, message: "Topic must not be empty." };
    }
    if (
        !Number.isInteger(max) ||
        max < INGEST_MAX_MIN ||
        max > INGEST_MAX_LIMIT
    ) {
        return {
            ok: false,
            message: `Maximum articles must be between ${INGEST_MAX_MIN} and ${INGEST_MAX_LIMIT}.`,
        };
    }
    return { ok: true };
}
