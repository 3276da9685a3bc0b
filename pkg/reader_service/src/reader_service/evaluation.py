"""Exact-match and token-F1 scoring for extractive QA benchmarks.

Uses the conventional answer normalization: lowercase, strip punctuation
and the articles a/an/the, collapse whitespace. A prediction's score
against multiple gold answers is the maximum over them.
"""

import re
import string
from collections import Counter


def normalize_answer(text: str) -> str:
    text = text.lower()
    text = "".join(ch for ch in text if ch not in string.punctuation)
    text = re.sub(r"\b(a|an|the)\b", " ", text)
    return " ".join(text.split())


def exact_match(prediction: str, gold_answers: list[str]) -> float:
    predicted = normalize_answer(prediction)
    return float(any(predicted == normalize_answer(g) for g in gold_answers))


def f1_score(prediction: str, gold_answers: list[str]) -> float:
    predicted_tokens = normalize_answer(prediction).split()
    best = 0.0
    for gold in gold_answers:
        gold_tokens = normalize_answer(gold).split()
        if not predicted_tokens or not gold_tokens:
            best = max(best, float(predicted_tokens == gold_tokens))
            continue
        common = Counter(predicted_tokens) & Counter(gold_tokens)
        overlap = sum(common.values())
        if overlap == 0:
            continue
        precision = overlap / len(predicted_tokens)
        recall = overlap / len(gold_tokens)
        best = max(best, 2 * precision * recall / (precision + recall))
    return best
