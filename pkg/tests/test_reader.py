import pytest
import requests
from hypothesis import given, strategies as st

from askarxiv.errors import EmptyQueryError, ReaderUnavailableError
from askarxiv.reader import (
    BaselineReader,
    ReaderRequest,
    RemoteReader,
    score_window,
)
from askarxiv.retriever import build_index
from askarxiv.store import SearchChunk

from conftest import FakeResponse


def index_over(texts: dict[int, str]):
    return build_index(
        SearchChunk(ordinal=0, text=t, word_count=len(t.split()), chunk_id=cid)
        for cid, t in texts.items()
    )


# The two quote-bearing chunks plus fillers that lower the idf of the
# generic vocabulary, so the span picker targets the rare terms.
QUOTE_CORPUS = {
    1: (
        "Many intrusion detection studies compare machine learning models. "
        "Naïve Bayes, SVM, KNN, and decision trees are commonly used. "
        "Deployment constraints matter in practice."
    ),
    2: (
        "Cybersecurity research faces several obstacles. "
        "Current challenges include lack of research methodology standards. "
        "Evaluation practices differ between laboratories."
    ),
    3: "Different machine learning models appear in many surveys of the field.",
    4: "The main goal of cybersecurity planning differs across organizations.",
}


@pytest.fixture
def quote_reader():
    index = index_over(QUOTE_CORPUS)
    return BaselineReader(index.idf), index


# ---------------------------------------------------------------------------
# score_window


def test_all_terms_present_scores_exactly_one():
    value = score_window(["alpha", "beta"], "alpha and beta appear", lambda t: 2.5)
    assert value == 1.0


def test_no_terms_present_scores_zero():
    assert score_window(["alpha"], "nothing relevant here", lambda t: 2.5) == 0.0


def test_partial_idf_mass():
    idf = {"alpha": 2.0, "beta": 1.0}.__getitem__
    value = score_window(["alpha", "beta"], "only alpha here", idf)
    assert value == pytest.approx(2.0 / 3.0, rel=1e-12)


def test_score_window_requires_terms():
    with pytest.raises(ValueError):
        score_window([], "text", lambda t: 1.0)


# ---------------------------------------------------------------------------
# BaselineReader


def test_request_invariants():
    with pytest.raises(ValueError):
        ReaderRequest(question="q", chunks=[], top_c=1)
    with pytest.raises(ValueError):
        ReaderRequest(question="q", chunks=[(1, "text")], top_c=0)


def test_empty_question_raises():
    reader = BaselineReader()
    request = ReaderRequest(question="the of", chunks=[(1, "some text")], top_c=1)
    with pytest.raises(EmptyQueryError):
        reader.extract_answers(request)


def test_no_overlap_returns_empty_list():
    reader = BaselineReader()
    request = ReaderRequest(
        question="quantum entanglement",
        chunks=[(1, "A single sentence about databases.")],
        top_c=1,
    )
    assert reader.extract_answers(request) == []


def test_enumeration_span_survives_commas(quote_reader):
    reader, _ = quote_reader
    request = ReaderRequest(
        question="Which machine learning models are commonly used?",
        chunks=sorted(QUOTE_CORPUS.items()),
        top_c=3,
    )
    answers = reader.extract_answers(request)
    assert answers
    top = answers[0]
    assert top.chunk_id == 1
    assert top.confidence == 1.0
    assert "Naïve Bayes, SVM, KNN, and decision trees" in top.answer_text
    assert top.answer_text == QUOTE_CORPUS[1][top.start : top.end]


def test_methodology_quote_is_top_answer(quote_reader):
    reader, _ = quote_reader
    request = ReaderRequest(
        question="What are the main challenges of cybersecurity research?",
        chunks=sorted(QUOTE_CORPUS.items()),
        top_c=3,
    )
    answers = reader.extract_answers(request)
    assert answers[0].chunk_id == 2
    assert "lack of research methodology standards" in answers[0].answer_text


def test_at_most_two_candidates_per_chunk():
    text = " ".join(
        f"Sentence {i} mentions zebras and watermelons today." for i in range(8)
    )
    reader = BaselineReader()
    request = ReaderRequest(
        question="zebras watermelons", chunks=[(1, text)], top_c=10
    )
    answers = reader.extract_answers(request)
    assert 1 <= len(answers) <= 2
    assert all(a.chunk_id == 1 for a in answers)


def test_results_sorted_by_confidence_then_chunk_then_start():
    chunks = [
        (4, "Both zebras and watermelons appear here. Filler sentence one."),
        (2, "Both zebras and watermelons appear here. Filler sentence two."),
        (9, "Only zebras appear in this one. Another filler sentence."),
    ]
    reader = BaselineReader()
    request = ReaderRequest(
        question="zebras watermelons", chunks=chunks, top_c=10
    )
    answers = reader.extract_answers(request)
    confidences = [a.confidence for a in answers]
    assert confidences == sorted(confidences, reverse=True)
    full_match_ids = [a.chunk_id for a in answers if a.confidence == 1.0]
    assert full_match_ids == sorted(full_match_ids)


def test_low_confidence_windows_dropped():
    # 21 distinct question terms, one present: coverage 1/21 < 0.05
    terms = [f"zubrow{i:02d}" for i in range(21)]
    reader = BaselineReader()
    request = ReaderRequest(
        question=" ".join(terms),
        chunks=[(1, f"This sentence only mentions {terms[0]} and nothing else.")],
        top_c=5,
    )
    assert reader.extract_answers(request) == []


def test_top_c_limits_candidates():
    chunks = [(i, f"Everyone loves zebras in chunk {i}.") for i in range(1, 6)]
    reader = BaselineReader()
    request = ReaderRequest(question="zebras", chunks=chunks, top_c=2)
    assert len(reader.extract_answers(request)) == 2


def test_recall_guarantee_full_window_match():
    chunks = [
        (1, "Unrelated filler text about nothing in particular."),
        (
            2,
            "Opening remark sentence. The elusive okapi eats rare truffles. "
            "Closing remark sentence.",
        ),
    ]
    reader = BaselineReader()
    request = ReaderRequest(question="okapi truffles", chunks=chunks, top_c=1)
    answers = reader.extract_answers(request)
    assert len(answers) == 1
    assert answers[0].chunk_id == 2
    assert answers[0].confidence == 1.0


_WORD = st.sampled_from(
    ["alpha", "bravo", "charlie", "delta", "echo", "zulu", "Quebec", "42mm"]
)
_CHUNK_TEXT = st.text(max_size=300)


@given(
    st.lists(_WORD, min_size=1, max_size=4),
    st.lists(_CHUNK_TEXT, min_size=1, max_size=4),
    st.integers(min_value=1, max_value=5),
)
def test_span_well_formedness_on_arbitrary_text(question_words, texts, top_c):
    question = " ".join(question_words)
    chunks = [(i + 1, t) for i, t in enumerate(texts)]
    reader = BaselineReader()
    answers = reader.extract_answers(
        ReaderRequest(question=question, chunks=chunks, top_c=top_c)
    )
    assert len(answers) <= top_c
    texts_by_id = dict(chunks)
    for a in answers:
        text = texts_by_id[a.chunk_id]
        assert 0 <= a.start < a.end <= len(text)
        assert a.answer_text == text[a.start : a.end]
        assert a.answer_text in a.context
        assert a.context in text
        assert 0.0 <= a.confidence <= 1.0
    keys = [(-a.confidence, a.chunk_id, a.start) for a in answers]
    assert keys == sorted(keys)


def test_determinism():
    reader = BaselineReader()
    request = ReaderRequest(
        question="zebras watermelons",
        chunks=[(1, "Zebras enjoy watermelons. So do elephants. Allegedly.")],
        top_c=3,
    )
    assert reader.extract_answers(request) == reader.extract_answers(request)


# ---------------------------------------------------------------------------
# RemoteReader and wire protocol


class WireSession:
    """In-process server speaking the reader wire protocol over a baseline."""

    def __init__(self):
        self.requests: list[dict] = []

    def post(self, url, json=None, timeout=None):
        assert url.endswith("/read")
        self.requests.append(json)
        try:
            request = ReaderRequest(
                question=json["question"],
                chunks=[(c["chunk_id"], c["text"]) for c in json["chunks"]],
                top_c=json["top_c"],
            )
            answers = BaselineReader().extract_answers(request)
        except EmptyQueryError:
            return FakeResponse(status_code=400, payload={"detail": "empty"})
        return FakeResponse(
            status_code=200,
            payload={
                "answers": [
                    {
                        "chunk_id": a.chunk_id,
                        "start": a.start,
                        "end": a.end,
                        "text": a.answer_text,
                        "confidence": a.confidence,
                    }
                    for a in answers
                ]
            },
        )


GOLDEN_REQUESTS = [
    ReaderRequest(
        question="zebras watermelons",
        chunks=[
            (1, "Zebras enjoy watermelons. So do elephants. Allegedly."),
            (7, "Watermelons ripen in summer. Zebras graze at dawn."),
        ],
        top_c=3,
    ),
    ReaderRequest(
        question="okapi truffles",
        chunks=[(5, "The elusive okapi eats rare truffles; nobody knows why.")],
        top_c=1,
    ),
    ReaderRequest(
        question="missing terms entirely",
        chunks=[(2, "A chunk about something else altogether.")],
        top_c=2,
    ),
]


@pytest.mark.parametrize("request_index", range(len(GOLDEN_REQUESTS)))
def test_remote_matches_baseline_on_golden_requests(request_index):
    request = GOLDEN_REQUESTS[request_index]
    remote = RemoteReader("http://reader.test", session=WireSession())
    assert remote.extract_answers(request) == BaselineReader().extract_answers(
        request
    )


def test_remote_maps_empty_question_to_client_error():
    remote = RemoteReader("http://reader.test", session=WireSession())
    request = ReaderRequest(question="the of", chunks=[(1, "text here")], top_c=1)
    with pytest.raises(EmptyQueryError):
        remote.extract_answers(request)


class FailingSession:
    def __init__(self, outcome):
        self._outcome = outcome

    def post(self, url, json=None, timeout=None):
        if isinstance(self._outcome, Exception):
            raise self._outcome
        return self._outcome


@pytest.mark.parametrize(
    "outcome",
    [
        requests.ConnectionError("refused"),
        requests.Timeout("slow"),
        FakeResponse(status_code=500),
        FakeResponse(status_code=200, payload={"unexpected": []}),
    ],
    ids=["refused", "timeout", "http500", "malformed"],
)
def test_remote_failures_raise_reader_unavailable(outcome):
    remote = RemoteReader("http://reader.test", session=FailingSession(outcome))
    request = ReaderRequest(question="zebras", chunks=[(1, "Zebras.")], top_c=1)
    with pytest.raises(ReaderUnavailableError):
        remote.extract_answers(request)


def test_remote_computes_context_from_supplied_chunk():
    text = "x" * 300 + " zebras graze here " + "y" * 300
    session = WireSession()
    remote = RemoteReader("http://reader.test", session=session)
    request = ReaderRequest(question="zebras", chunks=[(3, text)], top_c=1)
    answers = remote.extract_answers(request)
    assert len(answers) == 1
    a = answers[0]
    assert a.answer_text in a.context
    assert a.context == text[max(0, a.start - 200) : a.end + 200]
