"""ROUGE-L / ROUGE-N scoring, byte truncation and bootstrap confidence intervals.

Multi-reference scores take the reference with the best F (beta = 1).
Jackknifing over references is not done.
"""
from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

import numpy as np

from .textproc import tokenize

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class RougeScore:
    precision: float
    recall: float
    f_measure: float
    metric: str
    undefined: bool = False


@dataclass(frozen=True)
class ConfidenceInterval:
    point: float
    lower: float
    upper: float
    level: float = 0.95
    resamples: int = 1000


def _tokens(text) -> list[str]:
    if isinstance(text, str):
        return [t.surface.lower() for t in tokenize(text)]
    return list(text)


def lcs_length(a: Sequence, b: Sequence) -> int:
    if len(a) < len(b):
        a, b = b, a
    prev = [0] * (len(b) + 1)
    for x in a:
        cur = [0]
        for j, y in enumerate(b, 1):
            cur.append(prev[j - 1] + 1 if x == y else max(prev[j], cur[j - 1]))
        prev = cur
    return prev[-1]


def _f1(p: float, r: float) -> float:
    return 2 * p * r / (p + r) if p + r > 0 else 0.0


def _best(scores: list[RougeScore], metric: str) -> RougeScore:
    if not scores:
        return RougeScore(0.0, 0.0, 0.0, metric, undefined=True)
    best = scores[0]
    for s in scores[1:]:
        if s.f_measure > best.f_measure:
            best = s
    return best


def rouge_l(candidate, references: Sequence) -> RougeScore:
    if not references:
        raise ValueError("at least one reference is required")
    cand = _tokens(candidate)
    scored = []
    for ref in references:
        ref = _tokens(ref)
        if not cand or not ref:
            continue
        lcs = lcs_length(cand, ref)
        p, r = lcs / len(cand), lcs / len(ref)
        scored.append(RougeScore(p, r, _f1(p, r), "L"))
    return _best(scored, "L")


def _ngrams(tokens: list[str], n: int) -> Counter:
    return Counter(tuple(tokens[i : i + n]) for i in range(len(tokens) - n + 1))


def rouge_n(candidate, references: Sequence, n: int = 1) -> RougeScore:
    if n < 1:
        raise ValueError("n must be at least 1")
    if not references:
        raise ValueError("at least one reference is required")
    metric = f"N{n}"
    cand = _ngrams(_tokens(candidate), n)
    scored = []
    for ref in references:
        ref = _ngrams(_tokens(ref), n)
        if not ref:
            continue
        matched = sum((cand & ref).values())
        p = matched / sum(cand.values()) if cand else 0.0
        r = matched / sum(ref.values())
        scored.append(RougeScore(p, r, _f1(p, r), metric))
    return _best(scored, metric)


def truncate_bytes(text: str, budget: int) -> str:
    """Longest prefix whose UTF-8 encoding fits in ``budget`` bytes."""
    if budget < 0:
        raise ValueError("budget must be non-negative")
    data = text.encode("utf-8")
    if len(data) <= budget:
        return text
    return data[:budget].decode("utf-8", errors="ignore")


def bootstrap_ci(scores: Sequence[float], resamples: int = 1000, seed: int = 0, level: float = 0.95) -> ConfidenceInterval:
    """Percentile bootstrap of the mean."""
    if len(scores) == 0:
        raise ValueError("cannot bootstrap an empty score list")
    x = np.asarray(scores, dtype=float)
    point = float(x.mean())
    rng = np.random.default_rng(seed)
    means = x[rng.integers(0, len(x), size=(resamples, len(x)))].mean(axis=1)
    tail = (1 - level) / 2 * 100
    lower, upper = np.percentile(means, [tail, 100 - tail])
    # keep the interval bracketing the point estimate on pathological samples
    return ConfidenceInterval(point, min(float(lower), point), max(float(upper), point), level, resamples)


@dataclass(frozen=True)
class BatchResult:
    rows: list  # (id, RougeScore)
    ci: ConfidenceInterval | None
    skipped: list

    def to_tsv(self) -> str:
        lines = [f"{i}\t{s.precision:.5f}\t{s.recall:.5f}\t{s.f_measure:.5f}" for i, s in self.rows]
        if self.rows:
            mean_f = sum(s.f_measure for _, s in self.rows) / len(self.rows)
            line = f"MEAN\tF={mean_f:.5f}"
            if self.ci is not None:
                line += f"\tCI{int(self.ci.level * 100)}=[{self.ci.lower:.5f},{self.ci.upper:.5f}]\tresamples={self.ci.resamples}"
            lines.append(line)
        return "\n".join(lines) + "\n"


def _references_for(ref_dir: Path, stem: str) -> list[Path]:
    return sorted(p for p in ref_dir.iterdir()
                  if p.is_file() and (p.stem == stem or p.name.startswith(stem + ".")))


def score_directories(candidates_dir, references_dir, metric: str = "L", n: int = 1,
                      resamples: int = 1000, seed: int = 0) -> BatchResult:
    """Score each candidate file against reference files sharing its basename.

    A reference named ``<id>.<anything>`` also counts, so one candidate can
    have several references.
    """
    cand_dir, ref_dir = Path(candidates_dir), Path(references_dir)
    rows, skipped = [], []
    for cand in sorted(p for p in cand_dir.iterdir() if p.is_file() and not p.name.startswith(".")):
        refs = _references_for(ref_dir, cand.stem)
        if not refs:
            log.warning("no reference for %s; skipped", cand.name)
            skipped.append(cand.stem)
            continue
        text = cand.read_text(encoding="utf-8")
        ref_texts = [r.read_text(encoding="utf-8") for r in refs]
        score = rouge_l(text, ref_texts) if metric == "L" else rouge_n(text, ref_texts, n)
        rows.append((cand.stem, score))
    ci = bootstrap_ci([s.f_measure for _, s in rows], resamples, seed) if len(rows) >= 2 else None
    return BatchResult(rows, ci, skipped)
