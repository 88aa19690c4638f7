"""Synthetic corpora with known ground truth, for desk-scale experiments."""
from __future__ import annotations

import random
import string
from typing import Sequence

from .corpus import BioCategory, LabeledSentence
from .extract import Document
from .textproc import Sentence, tokenize

FILLER = ("the", "a", "of", "and", "in", "to", "was", "his", "her", "on", "with", "at")


def _pseudo_word(prefix: str, i: int) -> str:
    letters = string.ascii_lowercase
    return f"{prefix}{letters[i // 26 % 26]}{letters[i % 26]}k"


def category_vocabularies(size: int = 40) -> dict[BioCategory, list[str]]:
    """Disjoint pseudo-word vocabularies, one per category (``none`` included)."""
    return {c: [_pseudo_word(c.value, i) for i in range(size)] for c in BioCategory}


def _sentence(words: Sequence[str], index: int, doc_id: str) -> Sentence:
    text = " ".join(words).capitalize() + "."
    return Sentence(index, text, tuple(tokenize(text)), doc_id, 0, len(text))


def separable_corpus(n_train: int = 1000, n_test: int = 500, seed: int = 0, vocab_size: int = 40,
                     length: tuple[int, int] = (6, 12), filler_rate: float = 0.3,
                     multi_label_rate: float = 0.0) -> tuple[list[LabeledSentence], list[LabeledSentence]]:
    """Sentences drawn from category-specific vocabularies plus shared filler.

    With ``multi_label_rate > 0`` some biographical sentences mix words of a
    second category and carry both labels.
    """
    rng = random.Random(seed)
    vocab = category_vocabularies(vocab_size)
    cats = list(BioCategory)
    bio_cats = [c for c in cats if c is not BioCategory.NONE]

    def make(i: int) -> LabeledSentence:
        cat = rng.choice(cats)
        labels = [cat]
        if cat is not BioCategory.NONE and rng.random() < multi_label_rate:
            labels.append(rng.choice([c for c in bio_cats if c is not cat]))
        n = rng.randint(*length)
        words = []
        for _ in range(n):
            if rng.random() < filler_rate:
                words.append(rng.choice(FILLER))
            else:
                words.append(rng.choice(vocab[rng.choice(labels)]))
        return LabeledSentence(_sentence(words, i, "synthetic"), tuple(labels))

    data = [make(i) for i in range(n_train + n_test)]
    return data[:n_train], data[n_train:]


_NAMES_FIRST = ("Orla", "Tomasz", "Zoë", "Ines", "Kwame", "Björn", "Maud", "Ravi")
_NAMES_LAST = ("Pennick", "Adeyemi", "Lindqvist", "Okafor", "Brandt", "Moreau", "Ishikawa", "Quill")
_WORDS = (
    "award", "novel", "river", "council", "election", "career", "film", "studied", "married", "born",
    "university", "company", "scandal", "painted", "festival", "résumé", "café", "naïve", "mañana", "北京",
    "Zürich", "fiancée", "protest", "museum", "theatre", "contract", "victory", "research", "village", "orchestra",
)


def random_documents(rng: random.Random, n_docs: int = 3, n_sentences: tuple[int, int] = (3, 12),
                     mention_rate: float = 0.5) -> tuple[list[Document], str]:
    """Random multi-document sets about a random fictional person, with
    multi-byte characters; returns ``(documents, person full name)``."""
    first, last = rng.choice(_NAMES_FIRST), rng.choice(_NAMES_LAST)
    full = f"{first} {last}"
    docs = []
    for d in range(n_docs):
        sentences = []
        for _ in range(rng.randint(*n_sentences)):
            words = [rng.choice(_WORDS) for _ in range(rng.randint(2, 30))]
            if rng.random() < mention_rate:
                words.insert(rng.randrange(len(words) + 1), rng.choice((first, last, full)))
            if rng.random() < 0.1:
                words = ['"' + words[0]] + words[1:] + ['"']
            text = " ".join(words)
            sentences.append(text[0].upper() + text[1:] + rng.choice((".", "!", "?")))
        docs.append(Document(f"doc{d}", " ".join(sentences)))
    return docs, full
