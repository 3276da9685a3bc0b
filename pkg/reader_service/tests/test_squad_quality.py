"""Benchmark gate: EM >= 70% and F1 >= 75% on 200 SQuAD dev questions.

Needs the QA checkpoint (READER_MODEL, default deepset/roberta-base-squad2)
and the public SQuAD dev file (SQUAD_DEV_PATH, a local dev-v1.1.json or
dev-v2.0.json). When either cannot be loaded — this sandbox has no route to
huggingface.co — the gate skips with the reason; the scoring helpers are
tested unconditionally below.
"""

import json
import os
import random

import pytest
from fastapi.testclient import TestClient

from reader_service.app import create_app
from reader_service.evaluation import exact_match, f1_score, normalize_answer

SAMPLE_SIZE = 200
SAMPLE_SEED = 20210104
EM_FLOOR = 0.70
F1_FLOOR = 0.75


def load_dev_questions(path: str) -> list[dict]:
    """Flatten a SQuAD dev file into answerable question records."""
    with open(path, encoding="utf-8") as handle:
        data = json.load(handle)
    records = []
    for article in data["data"]:
        for paragraph in article["paragraphs"]:
            for qa in paragraph["qas"]:
                answers = [a["text"] for a in qa["answers"]]
                if not answers:  # v2.0 unanswerable entries
                    continue
                records.append(
                    {
                        "question": qa["question"],
                        "context": paragraph["context"],
                        "answers": answers,
                    }
                )
    return records


@pytest.fixture(scope="module")
def service_client():
    from reader_service.model import TransformerBackend

    model = os.environ.get("READER_MODEL", "deepset/roberta-base-squad2")
    try:
        backend = TransformerBackend(model)
    except Exception as exc:
        pytest.skip(f"QA checkpoint {model!r} unavailable here: {exc}")
    return TestClient(create_app(backend))


@pytest.fixture(scope="module")
def dev_sample():
    path = os.environ.get("SQUAD_DEV_PATH", "")
    if not path or not os.path.exists(path):
        pytest.skip(
            "SQuAD dev set not available; point SQUAD_DEV_PATH at a local "
            "dev-v1.1.json or dev-v2.0.json"
        )
    records = load_dev_questions(path)
    rng = random.Random(SAMPLE_SEED)
    return rng.sample(records, SAMPLE_SIZE)


def test_exact_match_and_f1_floor(service_client, dev_sample):
    em_total = 0.0
    f1_total = 0.0
    for record in dev_sample:
        response = service_client.post(
            "/read",
            json={
                "question": record["question"],
                "top_c": 1,
                "chunks": [{"chunk_id": 1, "text": record["context"]}],
            },
        )
        assert response.status_code == 200
        answers = response.json()["answers"]
        prediction = answers[0]["text"] if answers else ""
        em_total += exact_match(prediction, record["answers"])
        f1_total += f1_score(prediction, record["answers"])
    em = em_total / SAMPLE_SIZE
    f1 = f1_total / SAMPLE_SIZE
    print(f"SQuAD sample: EM={em:.4f} F1={f1:.4f}")
    assert em >= EM_FLOOR
    assert f1 >= F1_FLOOR


# ---------------------------------------------------------------------------
# the scoring helpers themselves


def test_normalization_strips_articles_case_and_punctuation():
    assert normalize_answer("The  Norman, conquest!") == "norman conquest"


def test_exact_match_uses_any_gold():
    assert exact_match("the Eiffel Tower", ["Eiffel Tower", "Paris"]) == 1.0
    assert exact_match("London", ["Eiffel Tower", "Paris"]) == 0.0


def test_f1_partial_overlap():
    value = f1_score("the quick brown fox", ["a quick fox"])
    # prediction tokens {quick, brown, fox}, gold {quick, fox}
    assert value == pytest.approx(2 * (2 / 3) * (2 / 2) / ((2 / 3) + (2 / 2)))


def test_f1_no_overlap_is_zero():
    assert f1_score("completely different", ["something else"]) == 0.0


def test_f1_empty_prediction():
    assert f1_score("", ["anything"]) == 0.0
