#!/usr/bin/env python3
"""Regenerates the synthetic corpora under fixtures/ (deterministic)."""

import pathlib
import random

ROOT = pathlib.Path(__file__).resolve().parent.parent / "fixtures"


def expand(template, lexicon, rng):
    tokens, tags = [], []
    for piece in template.split():
        if piece.startswith("{") and piece.endswith("}"):
            etype = piece[1:-1]
            words = rng.choice(lexicon[etype]).split()
            for i, w in enumerate(words):
                tokens.append(w)
                tags.append(("B-" if i == 0 else "I-") + etype)
        else:
            tokens.append(piece)
            tags.append("O")
    return tokens, tags


def write(path, sentences):
    path.parent.mkdir(parents=True, exist_ok=True)
    blocks = ["".join(f"{t} {g}\n" for t, g in zip(toks, tags)) for toks, tags in sentences]
    path.write_text("\n".join(blocks), encoding="utf-8")


def corpus(name, lexicon, train_templates, test_templates, n_train, n_test, seed):
    rng = random.Random(seed)
    train = [expand(rng.choice(train_templates), lexicon, rng) for _ in range(n_train)]
    test = [expand(rng.choice(test_templates), lexicon, rng) for _ in range(n_test)]
    write(ROOT / name / "train.txt", train)
    write(ROOT / name / "test.txt", test)


GENERAL = {
    "PER": ["Anna Berg", "Tomas Holt", "Mira Quist", "Jonas Falk", "Elin Sand", "Karl Vinter",
            "Ida Lund", "Oskar Nyberg"],
    "LOC": ["Florence", "Oslo", "Lisbon", "Krakow", "Tallinn", "Porto", "Bergen", "Turin"],
    "ORG": ["Nordic Steel", "Aurora Bank", "Velta Group", "Helix Media", "Baltic Rail"],
}

NEWS = {
    "PER": GENERAL["PER"],
    "LOC": GENERAL["LOC"],
}

BIO = {
    "PROTEIN": ["p53", "BRCA1", "interleukin-2", "NF-kappaB", "cyclin D1", "tumor necrosis factor"],
    "CHEMICAL": ["cisplatin", "lithium carbonate", "tamoxifen", "nicotine", "haloperidol", "valproate"],
}

GENERAL_TRAIN = [
    "{PER} was born in {LOC} .",
    "{PER} joined {ORG} last year .",
    "{ORG} opened an office in {LOC} .",
    "officials in {LOC} met {PER} on Monday .",
    "{PER} and {PER} criticised {ORG} .",
    "shares of {ORG} fell sharply .",
    "the mayor of {LOC} praised {ORG} .",
]
GENERAL_TEST = [
    "{PER} moved to {LOC} .",
    "{ORG} hired {PER} .",
    "{PER} spoke in {LOC} about {ORG} .",
    "analysts expect {ORG} to grow .",
]
NEWS_TRAIN = [
    "{PER} was born in {LOC} .",
    "officials in {LOC} met {PER} on Monday .",
    "{PER} travelled from {LOC} to {LOC} .",
    "{PER} and {PER} arrived in {LOC} .",
    "the council of {LOC} thanked {PER} .",
]
NEWS_TEST = [
    "{PER} moved to {LOC} .",
    "{PER} spoke in {LOC} yesterday .",
    "visitors from {LOC} greeted {PER} .",
]
BIO_TRAIN = [
    "expression of {PROTEIN} was induced by {CHEMICAL} .",
    "{CHEMICAL} inhibits {PROTEIN} activity in vitro .",
    "patients treated with {CHEMICAL} showed reduced {PROTEIN} levels .",
    "{PROTEIN} binds {PROTEIN} after exposure to {CHEMICAL} .",
    "we measured {PROTEIN} in cells exposed to {CHEMICAL} .",
]
BIO_TEST = [
    "{CHEMICAL} suppressed {PROTEIN} expression .",
    "levels of {PROTEIN} rose after {CHEMICAL} .",
    "{PROTEIN} was detected in {CHEMICAL} treated cells .",
]


def main():
    corpus("synthetic", GENERAL, GENERAL_TRAIN, GENERAL_TEST, 50, 20, 7)
    corpus("domain-news", NEWS, NEWS_TRAIN, NEWS_TEST, 40, 15, 11)
    corpus("domain-bio", BIO, BIO_TRAIN, BIO_TEST, 40, 15, 13)


if __name__ == "__main__":
    main()
