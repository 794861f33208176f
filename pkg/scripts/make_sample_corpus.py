#!/usr/bin/env python3
"""Generate the bundled synthetic sample corpus.

Builds a morphology-flavoured vocabulary (prefix + stem + suffix), samples
word types with a heavy-tailed distribution, and writes tokenized
sentences. Deterministic for a fixed seed; rerunning reproduces the
committed file byte for byte.
"""

import argparse
import random

PREFIXES = ["", "", "", "re", "un", "over", "under", "out", "pre", "mis", "dis", "inter"]

STEMS = [
    "work", "play", "read", "write", "light", "dark", "water", "fire",
    "wind", "stone", "cloud", "river", "mountain", "forest", "house",
    "garden", "bridge", "market", "story", "voice", "dream", "night",
    "morning", "winter", "summer", "travel", "wander", "listen", "speak",
    "learn", "teach", "build", "break", "carry", "follow", "gather",
    "hold", "join", "keep", "laugh", "measure", "open", "point",
    "question", "reason", "search", "share", "sing", "stand", "think",
    "turn", "walk", "watch", "answer", "begin", "change", "count",
    "draw", "explain", "find", "grow", "help", "move", "paint", "plan",
    "rest", "save", "sleep", "smile", "start", "stay", "talk", "trade",
    "train", "visit", "wait", "want", "wish", "wonder",
]

SUFFIXES = ["", "", "s", "ed", "ing", "er", "ers", "est", "ly", "ness", "ment", "ful", "less", "able", "ish"]

FUNCTION_WORDS = [
    "the", "a", "of", "and", "to", "in", "it", "is", "was", "for", "on",
    "with", "as", "that", "he", "she", "they", "we", "at", "by", "from",
    "not", "this", "but", "his", "her", "or", "an", "will", "my", "one",
    "all", "would", "there", "their", "what", "so", "up", "out", "if",
    "about", "who", "get", "which", "go", "me",
]


def build_types(rng, count):
    pool = set()
    while len(pool) < count:
        word = rng.choice(PREFIXES) + rng.choice(STEMS) + rng.choice(SUFFIXES)
        pool.add(word)
    return sorted(pool)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("output")
    parser.add_argument("--lines", type=int, default=900)
    parser.add_argument("--types", type=int, default=2200)
    parser.add_argument("--seed", type=int, default=20240811)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    content_types = build_types(rng, args.types)
    # Heavy-tailed weights so a few content words dominate, as in real text.
    weights = [1.0 / (rank + 3) ** 1.1 for rank in range(len(content_types))]
    rng.shuffle(content_types)

    lines = []
    for _ in range(args.lines):
        length = rng.randint(4, 15)
        words = []
        for _ in range(length):
            if rng.random() < 0.45:
                words.append(rng.choice(FUNCTION_WORDS))
            else:
                words.append(rng.choices(content_types, weights)[0])
            if len(words) > 2 and rng.random() < 0.06:
                words.append(",")
        words.append("." if rng.random() < 0.9 else "?")
        lines.append(" ".join(words))

    with open(args.output, "w", encoding="utf-8", newline="\n") as handle:
        handle.write("\n".join(lines) + "\n")
    print(f"wrote {len(lines)} lines to {args.output}")


if __name__ == "__main__":
    main()
