"""Clause-annotated biography corpus: parsing, label projection, statistics.

Corpus files are UTF-8 text with inline, non-nested tags named after the
nine biographical elements::

    Martin Luther King <nationality>was born in Atlanta, Georgia</nationality>.
"""
from __future__ import annotations

import math
import random
import re
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Iterable, Sequence

from .textproc import Sentence, attach_pos, read_pos_sidecar, segment_sentences


class BioCategory(str, Enum):
    # Enumeration order doubles as the tie-break order everywhere.
    BIO = "bio"
    FAME = "fame"
    PERSONALITY = "personality"
    SOCIAL = "social"
    EDUCATION = "education"
    NATIONALITY = "nationality"
    SCANDAL = "scandal"
    PERSONAL = "personal"
    WORK = "work"
    NONE = "none"

    def __str__(self):
        return self.value


class BinaryLabel(str, Enum):
    BIO2 = "bio2"
    NONE2 = "none2"

    def __str__(self):
        return self.value


TAG_CATEGORIES = tuple(c for c in BioCategory if c is not BioCategory.NONE)


def to_binary(category: BioCategory) -> BinaryLabel:
    return BinaryLabel.NONE2 if category is BioCategory.NONE else BinaryLabel.BIO2


class AnnotationError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


@dataclass(frozen=True)
class AnnotatedSpan:
    category: BioCategory
    text: str
    start: int
    end: int

    @property
    def char_range(self) -> tuple[int, int]:
        return (self.start, self.end)


@dataclass(frozen=True)
class LabeledSentence:
    """A sentence and its gold labels, in annotation order."""

    sentence: Sentence
    labels: tuple[BioCategory, ...]

    @property
    def primary(self) -> BioCategory:
        return self.labels[0]


@dataclass(frozen=True)
class AnnotatedDocument:
    doc_id: str
    text: str
    spans: tuple[AnnotatedSpan, ...]
    pos_tags: tuple[tuple[str, str], ...] | None = None

    def sentences(self) -> list[Sentence]:
        sentences = segment_sentences(self.text, self.doc_id)
        if self.pos_tags is not None:
            sentences = attach_pos(sentences, self.pos_tags)
        return sentences

    def labeled_sentences(self) -> list[LabeledSentence]:
        return project_labels(self.text, self.spans, self.sentences())


@dataclass(frozen=True)
class CorpusStats:
    counts: dict[BioCategory, int]
    total_spans: int

    def __add__(self, other: "CorpusStats") -> "CorpusStats":
        counts = {c: self.counts[c] + other.counts[c] for c in TAG_CATEGORIES}
        return CorpusStats(counts, self.total_spans + other.total_spans)

    def to_tsv(self) -> str:
        lines = [f"{c.value}\t{self.counts[c]}" for c in TAG_CATEGORIES]
        lines.append(f"TOTAL\t{self.total_spans}")
        return "\n".join(lines) + "\n"


_TAG_RE = re.compile(r"<(/?)([A-Za-z_]+)>")
_TAG_NAMES = {c.value: c for c in TAG_CATEGORIES}


def parse_annotated(text: str) -> tuple[str, list[AnnotatedSpan]]:
    plain: list[str] = []
    plain_len = 0
    spans: list[AnnotatedSpan] = []
    open_tag: tuple[BioCategory, int, int] | None = None  # category, plain start, raw offset
    pos = 0
    for m in _TAG_RE.finditer(text):
        plain.append(text[pos : m.start()])
        plain_len += m.start() - pos
        pos = m.end()
        closing, name = m.group(1) == "/", m.group(2)
        category = _TAG_NAMES.get(name)
        if category is None:
            raise AnnotationError(f"unknown tag <{m.group(1)}{name}>", m.start())
        if not closing:
            if open_tag is not None:
                raise AnnotationError(f"nested tag <{name}> inside <{open_tag[0].value}>", m.start())
            open_tag = (category, plain_len, m.start())
            continue
        if open_tag is None:
            raise AnnotationError(f"closing tag </{name}> without opening tag", m.start())
        if open_tag[0] is not category:
            raise AnnotationError(f"mismatched </{name}> closes <{open_tag[0].value}>", m.start())
        start = open_tag[1]
        if plain_len == start:
            raise AnnotationError(f"empty <{name}> span", open_tag[2])
        spans.append(AnnotatedSpan(category, "".join(plain)[start:plain_len], start, plain_len))
        open_tag = None
    if open_tag is not None:
        raise AnnotationError(f"unclosed tag <{open_tag[0].value}>", open_tag[2])
    plain.append(text[pos:])
    return "".join(plain), spans


def render_annotated(plain_text: str, spans: Sequence[AnnotatedSpan]) -> str:
    """Inverse of :func:`parse_annotated`."""
    out, pos = [], 0
    for span in sorted(spans, key=lambda s: s.start):
        out += [plain_text[pos : span.start], f"<{span.category.value}>", plain_text[span.start : span.end],
                f"</{span.category.value}>"]
        pos = span.end
    out.append(plain_text[pos:])
    return "".join(out)


def _check_partition(plain_text: str, sentences: Sequence[Sentence]) -> None:
    pos = 0
    for s in sentences:
        if s.start < pos or s.end > len(plain_text) or s.start > s.end:
            raise ValueError(f"sentence {s.index} out of order or out of bounds")
        if plain_text[pos : s.start].strip():
            raise ValueError(f"text before sentence {s.index} is not covered")
        if plain_text[s.start : s.end] != s.text:
            raise ValueError(f"sentence {s.index} does not match the text at its offsets")
        pos = s.end
    if plain_text[pos:].strip():
        raise ValueError("trailing text is not covered by any sentence")


def project_labels(
    plain_text: str, spans: Sequence[AnnotatedSpan], sentences: Sequence[Sentence]
) -> list[LabeledSentence]:
    """Label each sentence with the categories of spans overlapping it."""
    _check_partition(plain_text, sentences)
    ordered = sorted(spans, key=lambda s: s.start)
    out = []
    for sent in sentences:
        labels: list[BioCategory] = []
        for span in ordered:
            if span.start < sent.end and span.end > sent.start and span.category not in labels:
                labels.append(span.category)
        out.append(LabeledSentence(sent, tuple(labels) or (BioCategory.NONE,)))
    return out


def corpus_stats(docs: Iterable[AnnotatedDocument]) -> CorpusStats:
    counts = {c: 0 for c in TAG_CATEGORIES}
    for doc in docs:
        for span in doc.spans:
            counts[span.category] += 1
    return CorpusStats(counts, sum(counts.values()))


def split_corpus(docs: Sequence, train_fraction: float, seed: int) -> tuple[list, list]:
    if len(docs) < 2:
        raise ValueError("need at least 2 documents to split")
    if not 0 < train_fraction < 1:
        raise ValueError("train_fraction must lie in (0, 1)")
    order = list(range(len(docs)))
    random.Random(seed).shuffle(order)
    n_train = math.floor(train_fraction * len(docs) + 0.5)
    train = sorted(order[:n_train])
    test = sorted(order[n_train:])
    return [docs[i] for i in train], [docs[i] for i in test]


def parse_document(text: str, doc_id: str) -> AnnotatedDocument:
    plain, spans = parse_annotated(text)
    return AnnotatedDocument(doc_id, plain, tuple(spans))


def load_corpus(corpus_dir: str | Path) -> list[AnnotatedDocument]:
    """Load every file in ``corpus_dir``; the file stem names the person.

    A ``<name>.pos`` file next to ``<name>.txt`` supplies POS tags.
    """
    docs = []
    paths = sorted(p for p in Path(corpus_dir).iterdir()
                   if p.is_file() and not p.name.startswith(".") and p.suffix != ".pos")
    for path in paths:
        try:
            doc = parse_document(path.read_text(encoding="utf-8"), path.stem)
        except AnnotationError as exc:
            raise AnnotationError(f"{path.name}: {exc.args[0].rsplit(' at offset', 1)[0]}", exc.offset) from exc
        sidecar = path.with_suffix(".pos")
        if sidecar.exists():
            doc = AnnotatedDocument(doc.doc_id, doc.text, doc.spans, tuple(read_pos_sidecar(sidecar)))
        docs.append(doc)
    return docs
