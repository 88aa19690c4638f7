from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from ..corpus import BioCategory, LabeledSentence
from ..textproc import Sentence, Token


@dataclass(frozen=True)
class SaliencyFeatures:
    bio_fraction: float
    nonbio_fraction: float

    def as_tuple(self) -> tuple[float, float]:
        return (self.bio_fraction, self.nonbio_fraction)

    def __getitem__(self, i: int) -> float:
        return self.as_tuple()[i]


def saliency_features(sentence: Sentence | Sequence[Token], bio_lexicon, nonbio_lexicon) -> SaliencyFeatures:
    """Fractions of a sentence's tokens whose stems are clearly bio / non-bio words."""
    if not set(bio_lexicon).isdisjoint(nonbio_lexicon):
        raise ValueError("bio and non-bio lexicons overlap")
    tokens = sentence.tokens if isinstance(sentence, Sentence) else sentence
    if not tokens:
        return SaliencyFeatures(0.0, 0.0)
    n = len(tokens)
    bio = sum(t.stem in bio_lexicon for t in tokens)
    nonbio = sum(t.stem in nonbio_lexicon for t in tokens)
    return SaliencyFeatures(bio / n, nonbio / n)


def build_saliency_lexicons(
    train: Sequence[LabeledSentence], min_count: int = 3, purity: float = 0.8
) -> tuple[frozenset, frozenset]:
    """Stems seen at least ``min_count`` times that are ``purity``-pure for one side."""
    if not train:
        raise ValueError("cannot build lexicons from empty training data")
    if not 0.5 < purity <= 1:
        raise ValueError("purity must lie in (0.5, 1]")
    total, in_bio = Counter(), Counter()
    for ls in train:
        is_bio = ls.labels != (BioCategory.NONE,)
        for tok in ls.sentence.tokens:
            total[tok.stem] += 1
            if is_bio:
                in_bio[tok.stem] += 1
    bio, nonbio = set(), set()
    for stem, n in total.items():
        if n < min_count:
            continue
        if in_bio[stem] / n >= purity:
            bio.add(stem)
        elif (n - in_bio[stem]) / n >= purity:
            nonbio.add(stem)
    return frozenset(bio), frozenset(nonbio)
