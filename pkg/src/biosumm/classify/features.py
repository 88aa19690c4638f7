from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from pathlib import Path
from typing import Optional, Sequence

from ..corpus import AnnotatedDocument, BinaryLabel, BioCategory, to_binary
from ..textproc import Sentence, Token, tokenize


class TaskKind(str, Enum):
    TEN = "ten"
    TWO = "two"

    @property
    def labels(self) -> tuple:
        if self is TaskKind.TEN:
            return tuple(BioCategory)
        return tuple(BinaryLabel)

    @property
    def negative(self):
        return BioCategory.NONE if self is TaskKind.TEN else BinaryLabel.NONE2

    def parse_label(self, value: str):
        return (BioCategory if self is TaskKind.TEN else BinaryLabel)(value)

    def project(self, labels: Sequence[BioCategory]) -> tuple:
        """Map ten-class gold labels into this task's label space, keeping order."""
        if self is TaskKind.TEN:
            return tuple(labels)
        return tuple(dict.fromkeys(to_binary(c) for c in labels))


FEATURE_MODES = ("unigram", "bigram", "stem")
_MODE_ALIASES = {"stem_unigram": "stem"}


@dataclass(frozen=True)
class FeatureConfig:
    mode: str = "unigram"
    pos_augmented: bool = False
    hypernym_lexicon: Optional[str] = None
    hypernym_weight: float = 0.1

    def __post_init__(self):
        object.__setattr__(self, "mode", _MODE_ALIASES.get(self.mode, self.mode))
        if self.mode not in FEATURE_MODES:
            raise ValueError(f"unknown feature mode {self.mode!r}")
        if not 0 < self.hypernym_weight <= 1:
            raise ValueError("hypernym_weight must lie in (0, 1]")
        if self.hypernym_lexicon is not None and self.mode != "unigram":
            raise ValueError("hypernym expansion applies to unigram features only")

    def describe(self) -> str:
        return (f"features={self.mode} pos={int(self.pos_augmented)} "
                f"hypernyms={self.hypernym_lexicon or '-'} hypernym_weight={self.hypernym_weight!r}")


class FeatureError(ValueError):
    pass


@lru_cache(maxsize=8)
def load_hypernym_lexicon(path: str) -> dict[str, tuple[str, ...]]:
    """Read ``word<TAB>hypernym`` lines; a word may list several hypernyms."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise FeatureError(f"cannot read hypernym lexicon {path}: {exc.strerror}") from exc
    lexicon: dict[str, list[str]] = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        parts = line.split("\t")
        if len(parts) != 2 or not parts[0] or not parts[1]:
            raise FeatureError(f"{path}:{lineno}: expected word<TAB>hypernym")
        lexicon.setdefault(parts[0].lower(), []).append(parts[1])
    return {w: tuple(dict.fromkeys(h)) for w, h in lexicon.items()}


def _tokens_of(unit) -> Sequence[Token]:
    if isinstance(unit, Sentence):
        return unit.tokens
    if isinstance(unit, str):
        return tokenize(unit)
    return unit


def extract_features(unit, config: FeatureConfig = FeatureConfig()) -> dict[str, float]:
    """Sparse feature counts for a sentence, phrase text or token sequence."""
    tokens = _tokens_of(unit)
    if config.pos_augmented and any(t.pos is None for t in tokens):
        raise FeatureError("POS-augmented features need POS-annotated input")

    def ident(tok: Token) -> str:
        base = tok.stem if config.mode == "stem" else tok.surface.lower()
        return f"{base}/{tok.pos}" if config.pos_augmented else base

    ids = [ident(t) for t in tokens]
    if config.mode == "bigram":
        ids = [f"{a}_{b}" for a, b in zip(ids, ids[1:])]
    fv: dict[str, float] = dict(Counter(ids))

    if config.hypernym_lexicon is not None:
        lexicon = load_hypernym_lexicon(config.hypernym_lexicon)
        for word, count in Counter(t.surface.lower() for t in tokens).items():
            for hyper in lexicon.get(word, ()):
                fv[hyper] = fv.get(hyper, 0.0) + config.hypernym_weight * count
    return fv


def training_units(docs: Sequence[AnnotatedDocument], unit: str = "sentence"):
    """Yield ``(tokens, gold_labels)`` training units from annotated documents.

    ``unit="sentence"`` uses whole sentences with projected labels;
    ``unit="phrase"`` uses the annotated spans themselves plus the
    unannotated sentences as ``none`` examples.
    """
    if unit not in ("sentence", "phrase"):
        raise ValueError(f"unknown training unit {unit!r}")
    for doc in docs:
        labeled = doc.labeled_sentences()
        if unit == "sentence":
            for ls in labeled:
                yield ls.sentence.tokens, ls.labels
            continue
        by_offset = {s.sentence.start: s for s in labeled}
        token_index = _token_lookup(labeled)
        for span in doc.spans:
            yield token_index(span.start, span.end) or tuple(tokenize(span.text)), (span.category,)
        for ls in by_offset.values():
            if ls.labels == (BioCategory.NONE,):
                yield ls.sentence.tokens, ls.labels


def _token_lookup(labeled):
    # Reuses sentence tokens (and their POS tags) for spans inside one sentence.
    def lookup(start: int, end: int):
        for ls in labeled:
            s = ls.sentence
            if s.start <= start and end <= s.end:
                toks, cursor = [], 0
                for tok in s.tokens:
                    at = s.text.find(tok.surface, cursor)
                    cursor = at + len(tok.surface)
                    if start <= s.start + at and s.start + cursor <= end:
                        toks.append(tok)
                return tuple(toks)
        return None

    return lookup
