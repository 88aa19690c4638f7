"""Redundancy elimination on the five Lance Armstrong sentences."""
import argparse

from biosumm.extract import RankedSentence, cosine, eliminate_redundancy, tf_vector
from biosumm.textproc import segment_sentences

SENTENCES = [
    "Cycling helped him win his battle with cancer, and cancer helped him win the Tour de France.",
    "Armstrong underwent four rounds of intense chemotherapy.",
    "The surgeries and chemotherapy eliminated the cancer, and Armstrong began his cycling comeback.",
    "The foundation supports cancer patients and survivors through education, awareness and research.",
    "He underwent months of chemotherapy.",
]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--budget", type=int, default=max(len(s.encode()) for s in SENTENCES))
    args = ap.parse_args()
    sents = [segment_sentences(t, "armstrong")[0] for t in SENTENCES]
    pool = tf_vector(sents)
    for i, s in enumerate(sents, 1):
        print(f"{i}\t{s.byte_len}B\tcos(pool)={cosine(tf_vector([s]), pool):.3f}\t{s.text}")
    out = eliminate_redundancy([RankedSentence(s, 1.0, ()) for s in sents], args.budget, pool_k=len(sents))
    kept = [SENTENCES.index(s.text) + 1 for s in out.sentences]
    print(f"budget {args.budget}: kept sentence(s) {kept}\n{out.text}")


if __name__ == "__main__":
    main()
