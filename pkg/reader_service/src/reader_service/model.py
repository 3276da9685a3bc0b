"""Transformer backend: a SQuAD-fine-tuned extractive QA checkpoint.

Chunks longer than the model context are encoded as overlapping windows
with a fixed token stride; every window's start/end probabilities go
through the shared span selector, and spans are merged back in original
character offsets.
"""

import logging

from .spans import SpanCandidate, merge_window_candidates, select_spans

logger = logging.getLogger(__name__)

DEFAULT_MODEL = "deepset/roberta-base-squad2"
MAX_TOKENS = 384
WINDOW_STRIDE = 128


class TransformerBackend:
    """Loads the checkpoint eagerly; construction fails if it cannot."""

    def __init__(
        self,
        model_name_or_path: str = DEFAULT_MODEL,
        max_tokens: int = MAX_TOKENS,
        stride: int = WINDOW_STRIDE,
    ):
        import torch
        from transformers import AutoModelForQuestionAnswering, AutoTokenizer

        self._torch = torch
        self.model_name = model_name_or_path
        self.max_tokens = max_tokens
        self.stride = stride
        logger.info("loading extractive QA checkpoint %s", model_name_or_path)
        self._tokenizer = AutoTokenizer.from_pretrained(model_name_or_path)
        self._model = AutoModelForQuestionAnswering.from_pretrained(
            model_name_or_path
        )
        self._model.eval()

    def best_spans(
        self, question: str, text: str, top_n: int
    ) -> list[SpanCandidate]:
        """Top spans for one chunk, in character offsets of ``text``."""
        torch = self._torch
        encoded = self._tokenizer(
            question,
            text,
            truncation="only_second",
            max_length=self.max_tokens,
            stride=self.stride,
            return_overflowing_tokens=True,
            return_offsets_mapping=True,
            padding=False,
        )
        per_window: list[list[SpanCandidate]] = []
        for window_index in range(len(encoded["input_ids"])):
            input_ids = torch.tensor([encoded["input_ids"][window_index]])
            attention = torch.tensor([encoded["attention_mask"][window_index]])
            with torch.no_grad():
                output = self._model(input_ids=input_ids, attention_mask=attention)
            start_probs = torch.softmax(output.start_logits[0], dim=-1).tolist()
            end_probs = torch.softmax(output.end_logits[0], dim=-1).tolist()

            sequence_ids = encoded.sequence_ids(window_index)
            offsets = [
                offset if sequence_ids[i] == 1 else None
                for i, offset in enumerate(encoded["offset_mapping"][window_index])
            ]
            per_window.append(
                select_spans(offsets, start_probs, end_probs, top_n=top_n)
            )
        return merge_window_candidates(per_window, top_n=top_n)
