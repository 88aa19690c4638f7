"""Sentence segmentation, tokenization, stemming and person-name matching.

Everything here is deterministic and free of external models; the rest of
the package builds on these units.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Callable, Iterable, Optional, Sequence

Stemmer = Callable[[str], str]

# Longest applicable suffix wins; a strip must leave at least MIN_STEM_LEN chars.
SUFFIXES = ("ations", "ation", "ness", "ments", "ment", "ings", "ing", "ies", "ed", "es", "s")
MIN_STEM_LEN = 3

ABBREVIATIONS = frozenset(
    """
    dr. mr. mrs. ms. st. u.s. vs. etc. jr. sr. prof. gen. sen. rep. gov. lt.
    col. capt. sgt. mt. inc. co. corp. ltd. no. jan. feb. mar. apr. aug. sept.
    sep. oct. nov. dec. u.k. u.n. a.m. p.m. e.g. i.e. rev. ft.
    """.split()
)

_TOKEN_RE = re.compile(r"(?:[^\W_]|')+")
_BOUNDARY_RE = re.compile(r"[.!?][\"'”’)\]]*(?=\s+[\"'“‘(\[]*[A-Z])")


@dataclass(frozen=True)
class Token:
    surface: str
    stem: str
    pos: Optional[str] = None


@dataclass(frozen=True)
class Sentence:
    """A sentence of a source document.

    ``start``/``end`` are character offsets into the document text, so
    ``doc_text[start:end] == text``.
    """

    index: int
    text: str
    tokens: tuple[Token, ...]
    doc_id: str = ""
    start: int = 0
    end: int = 0
    byte_len: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "byte_len", len(self.text.encode("utf-8")))

    @property
    def words(self) -> list[str]:
        return [t.surface for t in self.tokens]


@dataclass(frozen=True)
class PersonName:
    full: str
    first: str
    last: str

    @classmethod
    def parse(cls, name: str) -> "PersonName":
        parts = name.split()
        if not parts:
            raise ValueError("empty person name")
        return cls(" ".join(parts), parts[0], parts[-1])


def suffix_stem(word: str) -> str:
    if not word:
        raise ValueError("cannot stem an empty word")
    w = word.lower()
    for suffix in SUFFIXES:  # ordered longest first
        if w.endswith(suffix) and len(w) - len(suffix) >= MIN_STEM_LEN:
            return w[: -len(suffix)]
    return w


# kept as the public name for the pluggable default
stem = suffix_stem


def _token_spans(text: str) -> Iterable[tuple[int, int]]:
    for m in _TOKEN_RE.finditer(text):
        s, e = m.span()
        while s < e and text[s] == "'":
            s += 1
        while e > s and text[e - 1] == "'":
            e -= 1
        if s < e:
            yield s, e


def tokenize(text: str, stemmer: Stemmer = suffix_stem) -> list[Token]:
    """Maximal runs of letters, digits and apostrophes; other characters drop."""
    return [Token(text[s:e], stemmer(text[s:e])) for s, e in _token_spans(text)]


def _is_abbreviation(text: str, dot: int) -> bool:
    start = dot
    while start > 0 and not text[start - 1].isspace():
        start -= 1
    word = text[start : dot + 1].lstrip("\"'(“‘[").lower()
    return word in ABBREVIATIONS


def _boundaries(text: str) -> list[int]:
    cuts = []
    for m in _BOUNDARY_RE.finditer(text):
        if text[m.start()] == "." and _is_abbreviation(text, m.start()):
            continue
        cuts.append(m.end())
    return cuts


def segment_sentences(
    text: str, doc_id: str = "", stemmer: Stemmer = suffix_stem
) -> list[Sentence]:
    sentences: list[Sentence] = []
    prev = 0
    for cut in _boundaries(text) + [len(text)]:
        chunk = text[prev:cut]
        stripped = chunk.strip()
        if stripped:
            start = prev + (len(chunk) - len(chunk.lstrip()))
            end = start + len(stripped)
            sentences.append(
                Sentence(len(sentences), stripped, tuple(tokenize(stripped, stemmer)), doc_id, start, end)
            )
        prev = cut
    return sentences


def name_variants(name: PersonName) -> set[str]:
    return {name.first, name.last, name.full}


def _variant_pattern(variant: str) -> re.Pattern:
    body = r"\s+".join(re.escape(p) for p in variant.split())
    return re.compile(rf"(?<![^\W_]|'){body}(?![^\W_]|')")


def mentions_person(sentence: Sentence | str, name: PersonName) -> bool:
    """Case-sensitive, token-aligned match of any name variant.

    A possessive such as "Armstrong's" is a single token and does not match
    "Armstrong".
    """
    text = sentence if isinstance(sentence, str) else sentence.text
    return any(_variant_pattern(v).search(text) for v in name_variants(name))


def read_pos_sidecar(path: str | Path) -> list[tuple[str, str]]:
    pairs = []
    for lineno, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        if not line.strip():
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise ValueError(f"{path}:{lineno}: expected token<TAB>tag")
        pairs.append((parts[0], parts[1]))
    return pairs


def attach_pos(sentences: Sequence[Sentence], pairs: Sequence[tuple[str, str]]) -> list[Sentence]:
    """Attach sidecar POS tags, aligned 1:1 with the tokens of ``sentences``."""
    n_tokens = sum(len(s.tokens) for s in sentences)
    if n_tokens != len(pairs):
        raise ValueError(f"POS sidecar has {len(pairs)} entries for {n_tokens} tokens")
    out, i = [], 0
    for s in sentences:
        tagged = []
        for tok in s.tokens:
            surface, tag = pairs[i]
            if surface != tok.surface:
                raise ValueError(f"POS sidecar token {surface!r} does not match {tok.surface!r}")
            tagged.append(replace(tok, pos=tag))
            i += 1
        out.append(replace(s, tokens=tuple(tagged)))
    return out


def normalize_text(text: str) -> str:
    """Case-folded, whitespace-collapsed form used for duplicate detection."""
    return " ".join(text.casefold().split())


# Function words ignored by ranking and redundancy similarity.
STOPWORDS = frozenset(
    """
    a about above after again against all also am an and any are as at be
    because been before being below between both but by can could did do does
    doing down during each few for from further had has have having he her here
    hers herself him himself his how i if in into is it its itself just me more
    most my myself no nor not now of off on once only or other our ours
    ourselves out over own said same she should so some such than that the
    their theirs them themselves then there these they this those through to
    too under until up very was we were what when where which while who whom
    why will with would you your yours yourself yourselves one two its it's
    he's she's says say told mr mrs ms
    """.split()
)


def load_stopwords(path: str | Path | None) -> frozenset[str]:
    if path is None:
        return STOPWORDS
    words = Path(path).read_text(encoding="utf-8").split()
    return frozenset(w.lower() for w in words)
