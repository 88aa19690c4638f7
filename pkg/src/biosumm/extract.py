"""Biography extraction: name filter, informativeness ranking, redundancy
elimination and byte-budgeted assembly.

Informativeness compares how often a word occurs in the document set with
how often it occurs in a large background ("world") corpus. Both sides use
add-one smoothed relative frequencies over the union vocabulary, so the
word score is a likelihood ratio: frequent-everywhere words sit near 1,
words that are rare in the world but prominent in the documents score high.
"""
from __future__ import annotations

import logging
import math
import re
from collections import Counter
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Iterable, Mapping, Optional, Protocol, Sequence

from .rouge import truncate_bytes
from .textproc import (
    STOPWORDS, PersonName, Sentence, Token, mentions_person, normalize_text, segment_sentences, tokenize,
)

log = logging.getLogger(__name__)

DEFAULT_BUDGET = 665
MIN_WORDS = 5
MAX_QUOTED_FRACTION = 0.5
# Size of the background corpus the method was designed around; informational only.
REFERENCE_WORLD_WORDS = 413_307_562


@dataclass(frozen=True)
class Document:
    doc_id: str
    text: str
    date: Optional[str] = None

    def sentences(self) -> list[Sentence]:
        return segment_sentences(self.text, self.doc_id)


def parse_document(raw: str, doc_id: str) -> Document:
    """Plain article text with an optional ``DATE:`` first line."""
    first, sep, rest = raw.partition("\n")
    if first.startswith("DATE:"):
        return Document(doc_id, rest, first[len("DATE:"):].strip())
    return Document(doc_id, raw)


def load_documents(docs_dir: str | Path) -> list[Document]:
    paths = sorted(p for p in Path(docs_dir).iterdir() if p.is_file() and not p.name.startswith("."))
    return [parse_document(p.read_text(encoding="utf-8"), p.stem) for p in paths]


# ---------------------------------------------------------------- term statistics

class WorldStatsError(ValueError):
    pass


@dataclass(frozen=True)
class TermStats:
    counts: Mapping[str, int]
    total: int

    def __post_init__(self):
        if self.total != sum(self.counts.values()):
            raise ValueError("TermStats total does not match its counts")

    @classmethod
    def from_stems(cls, stems: Iterable[str]) -> "TermStats":
        counts = Counter(stems)
        return cls(dict(counts), sum(counts.values()))

    @classmethod
    def from_sentences(cls, sentences: Iterable[Sentence]) -> "TermStats":
        return cls.from_stems(t.stem for s in sentences for t in s.tokens)

    def merge(self, other: "TermStats") -> "TermStats":
        counts = Counter(self.counts)
        counts.update(other.counts)
        return TermStats(dict(counts), self.total + other.total)

    def scaled(self, k: int) -> "TermStats":
        return TermStats({w: c * k for w, c in self.counts.items()}, self.total * k)

    def relative_frequency(self, word: str, vocab_size: int) -> float:
        return (self.counts.get(word, 0) + 1) / (self.total + vocab_size)


def dump_world_stats(stats: TermStats) -> str:
    lines = [f"TOTAL\t{stats.total}"]
    lines += [f"{w}\t{stats.counts[w]}" for w in sorted(stats.counts)]
    return "\n".join(lines) + "\n"


def load_world_stats(path: str | Path) -> TermStats:
    """Read a ``TOTAL<TAB>n`` header followed by sorted ``stem<TAB>count`` lines."""
    try:
        lines = Path(path).read_text(encoding="utf-8").splitlines()
    except FileNotFoundError as exc:
        raise WorldStatsError(f"world stats file not found: {path}") from exc
    if not lines or not lines[0].startswith("TOTAL\t"):
        raise WorldStatsError(f"{path}: missing TOTAL header")
    try:
        total = int(lines[0].split("\t")[1])
        counts = {}
        prev = None
        for lineno, line in enumerate(lines[1:], 2):
            word, count = line.split("\t")
            if prev is not None and word <= prev:
                raise WorldStatsError(f"{path}:{lineno}: entries not sorted by stem")
            counts[word] = int(count)
            prev = word
    except ValueError as exc:
        if isinstance(exc, WorldStatsError):
            raise
        raise WorldStatsError(f"{path}: malformed line ({exc})") from exc
    if sum(counts.values()) != total:
        raise WorldStatsError(f"{path}: TOTAL {total} does not match the sum of counts {sum(counts.values())}")
    return TermStats(counts, total)


class Informativeness:
    """Word scores of a document set against a world table."""

    def __init__(self, doc_stats: TermStats, world_stats: TermStats):
        self.doc = doc_stats
        self.world = world_stats
        extra = sum(1 for w in doc_stats.counts if w not in world_stats.counts)
        self.vocab_size = len(world_stats.counts) + extra

    def word(self, stem: str) -> float:
        return self.doc.relative_frequency(stem, self.vocab_size) / self.world.relative_frequency(stem, self.vocab_size)


def word_informativeness(w: str, doc_stats: TermStats, world_stats: TermStats) -> float:
    return Informativeness(doc_stats, world_stats).word(w)


# ---------------------------------------------------------------- filtering

_QUOTE_RE = re.compile(r"\"[^\"]*\"?|“[^”]*”?")


def quoted_fraction(text: str) -> float:
    """Share of characters inside double quotes (an unclosed quote runs to the end)."""
    if not text:
        return 0.0
    return sum(m.end() - m.start() for m in _QUOTE_RE.finditer(text)) / len(text)


def name_filter(sentences: Iterable[Sentence], name: PersonName) -> list[Sentence]:
    """Keep person-mentioning sentences of five or more words that are not mostly quotation."""
    return [
        s for s in sentences
        if len(s.tokens) >= MIN_WORDS
        and quoted_fraction(s.text) <= MAX_QUOTED_FRACTION
        and mentions_person(s, name)
    ]


def merge_candidates(filtered: Iterable[Sentence], classified: Iterable[Sentence]) -> list[Sentence]:
    seen, out = set(), []
    for s in [*filtered, *classified]:
        key = normalize_text(s.text)
        if key not in seen:
            seen.add(key)
            out.append(s)
    return out


# ---------------------------------------------------------------- ranking

@dataclass(frozen=True)
class RankedSentence:
    sentence: Sentence
    score: float
    word_scores: tuple[float, ...]


def content_tokens(sentence: Sentence, stopwords=STOPWORDS) -> list[Token]:
    return [t for t in sentence.tokens if t.surface.lower() not in stopwords]


def score_sentences(candidates: Sequence[Sentence], doc_stats: TermStats, world_stats: TermStats,
                    stopwords=STOPWORDS) -> list[RankedSentence]:
    """Mean word informativeness over non-stopword tokens, best first (stable)."""
    info = Informativeness(doc_stats, world_stats)
    ranked = []
    for s in candidates:
        scores = tuple(info.word(t.stem) for t in content_tokens(s, stopwords))
        ranked.append(RankedSentence(s, sum(scores) / len(scores) if scores else 0.0, scores))
    return sorted(ranked, key=lambda r: -r.score)


# ---------------------------------------------------------------- redundancy elimination

@dataclass
class Summary:
    person: PersonName
    sentences: list[Sentence]
    scores: list[float]
    byte_budget: int = DEFAULT_BUDGET
    truncated: bool = False
    status: str = "ok"

    @property
    def text(self) -> str:
        return " ".join(s.text for s in self.sentences)

    @property
    def total_bytes(self) -> int:
        return len(self.text.encode("utf-8"))

    def sidecar(self) -> list[dict]:
        return [{"doc_id": s.doc_id, "index": s.index, "score": c} for s, c in zip(self.sentences, self.scores)]


def _joined_bytes(sentences: Sequence[Sentence]) -> int:
    if not sentences:
        return 0
    return sum(s.byte_len for s in sentences) + len(sentences) - 1


def tf_vector(sentences: Iterable[Sentence], stopwords=STOPWORDS) -> Counter:
    return Counter(t.stem for s in sentences for t in content_tokens(s, stopwords))


def cosine(a: Mapping[str, float], b: Mapping[str, float]) -> float:
    dot = sum(v * b.get(k, 0) for k, v in a.items())
    na = math.sqrt(sum(v * v for v in a.values()))
    nb = math.sqrt(sum(v * v for v in b.values()))
    return dot / (na * nb) if na and nb else 0.0


def default_pool_size(ranked: Sequence[RankedSentence], byte_budget: int) -> int:
    """Twice the number of top sentences that fit the budget (at least 2)."""
    fit, used = 0, -1
    for r in ranked:
        used += r.sentence.byte_len + 1
        if used > byte_budget:
            break
        fit += 1
    return 2 * max(fit, 1)


def eliminate_redundancy(ranked: Sequence[RankedSentence], byte_budget: int = DEFAULT_BUDGET,
                         pool_k: Optional[int] = None, min_similarity: Optional[float] = None,
                         stopwords=STOPWORDS, person: Optional[PersonName] = None) -> Summary:
    """Shrink the top-ranked pool one sentence at a time, always dropping the
    sentence whose removal keeps the rest most similar to the whole pool.

    Stops once the joined text fits ``byte_budget``. With ``min_similarity``
    set, removal continues past the budget while similarity stays at or above
    the floor. A lone sentence that still overflows is cut at a byte boundary.
    """
    if byte_budget < 1:
        raise ValueError("byte_budget must be at least 1")
    if not ranked:
        raise ValueError("nothing to summarize")
    k = pool_k if pool_k is not None else default_pool_size(ranked, byte_budget)
    pool: list[RankedSentence] = []
    seen = set()
    for r in ranked:
        key = normalize_text(r.sentence.text)
        if key not in seen:
            seen.add(key)
            pool.append(r)
        if len(pool) == k:
            break

    target = tf_vector((r.sentence for r in pool), stopwords)
    vectors = [tf_vector([r.sentence], stopwords) for r in pool]
    current = Counter(target)
    alive = list(range(len(pool)))

    def best_removal():
        best_i, best_sim = None, -1.0
        for i in reversed(alive):  # ties drop the lower-ranked sentence
            sim = cosine(current - vectors[i], target)
            if sim > best_sim:
                best_i, best_sim = i, sim
        return best_i, best_sim

    while len(alive) > 1:
        over = _joined_bytes([pool[i].sentence for i in alive]) > byte_budget
        i, sim = best_removal()
        if not over and (min_similarity is None or sim < min_similarity):
            break
        alive.remove(i)
        current = current - vectors[i]

    kept = [pool[i] for i in alive]
    sentences = [r.sentence for r in kept]
    truncated = False
    if _joined_bytes(sentences) > byte_budget:
        only = sentences[0]
        sentences = [replace(only, text=truncate_bytes(only.text, byte_budget),
                             tokens=tuple(tokenize(truncate_bytes(only.text, byte_budget))))]
        truncated = True
    summary = Summary(person or PersonName("", "", ""), sentences, [r.score for r in kept], byte_budget, truncated)
    assert summary.total_bytes <= byte_budget
    return summary


# ---------------------------------------------------------------- end to end

class SentenceClassifier(Protocol):
    def is_biographical(self, sentence: Sentence) -> bool: ...


@dataclass(frozen=True)
class SummaryConfig:
    byte_budget: int = DEFAULT_BUDGET
    pool_k: Optional[int] = None
    min_similarity: Optional[float] = None
    stopwords: frozenset = field(default=STOPWORDS, repr=False)


def summarize(docs: Sequence[Document], name: PersonName, classifier: Optional[SentenceClassifier],
              world_stats: TermStats, config: SummaryConfig = SummaryConfig()) -> Summary:
    if not docs:
        raise ValueError("empty document set")
    sentences = [s for d in docs for s in d.sentences()]
    filtered = name_filter(sentences, name)
    if not filtered:
        log.warning("no sentence mentions %s", name.full)
        return Summary(name, [], [], config.byte_budget, status="no-mentions")
    classified = [s for s in sentences if classifier.is_biographical(s)] if classifier is not None else []
    candidates = merge_candidates(filtered, classified)
    ranked = score_sentences(candidates, TermStats.from_sentences(sentences), world_stats, config.stopwords)
    summary = eliminate_redundancy(ranked, config.byte_budget, config.pool_k, config.min_similarity,
                                   config.stopwords, name)
    return summary
