"""Brute-force reference computations used to pin expected test values.

Everything in this module is deliberately slow and direct: scores are
obtained by enumerating word types and occurrences, and code lengths by
building full token tables and summing. Nothing here imports the gbpe
package, so these functions stay independent of the code they check.

Run as a script to print the reference values for the tiny corpus
T1 = {ab:3, abc:2, bc:1}.
"""

import math
from collections import Counter

# Accessor placeholder for occurrences touching the start/end of a word.
BOUNDARY = None

# Fresh sentinels for the hypothetical replacement table: the index symbol
# standing in for the candidate, and the note delimiter. Plain object()
# instances can never collide with real symbols.
INDEX = object()
DELIM = object()


def char_split(vocab):
    return {w: list(w) for w in vocab}


def greedy_starts(symbols, left, right):
    """Start indices of greedy left-to-right non-overlapping occurrences."""
    starts = []
    i = 0
    while i < len(symbols) - 1:
        if symbols[i] == left and symbols[i + 1] == right:
            starts.append(i)
            i += 2
        else:
            i += 1
    return starts


def pair_count(vocab, seqs, pair):
    """Weighted occurrence count of an adjacent pair over the corpus."""
    return sum(
        f * len(greedy_starts(seqs[w], *pair)) for w, f in vocab.items()
    )


def all_pair_counts(vocab, seqs):
    counts = Counter()
    for w, f in vocab.items():
        symbols = seqs[w]
        for pair in set(zip(symbols, symbols[1:])):
            counts[pair] += f * len(greedy_starts(symbols, *pair))
    return +counts


def frq(vocab, seqs, pair):
    """Number of word types containing the pair adjacently."""
    return sum(1 for w in vocab if greedy_starts(seqs[w], *pair))


def containing_freq(vocab, seqs, pair):
    """Summed frequency of word types containing the pair."""
    return sum(f for w, f in vocab.items() if greedy_starts(seqs[w], *pair))


def accessor_sets(vocab, seqs, pair):
    preds, succs = set(), set()
    for w in vocab:
        symbols = seqs[w]
        for i in greedy_starts(symbols, *pair):
            preds.add(symbols[i - 1] if i > 0 else BOUNDARY)
            succs.add(symbols[i + 2] if i + 2 < len(symbols) else BOUNDARY)
    return preds, succs


def av(vocab, seqs, pair):
    preds, succs = accessor_sets(vocab, seqs, pair)
    if not preds:
        return 0
    return min(len(preds), len(succs))


def token_counts(vocab, seqs):
    counts = Counter()
    for w, f in vocab.items():
        for s in seqs[w]:
            counts[s] += f
    return counts


def description_length(counts):
    total = sum(counts.values())
    if total == 0:
        return 0.0
    return -sum(c * math.log2(c / total) for c in counts.values() if c > 0)


def dlg(vocab, seqs, pair):
    """Code-length gain of replacing the pair with an index symbol.

    The replacement table substitutes every greedy occurrence with a
    fresh index symbol and appends a note consisting of the pair's two
    component symbols plus one delimiter token.
    """
    counts = token_counts(vocab, seqs)
    n = pair_count(vocab, seqs, pair)
    left, right = pair
    replaced = Counter(counts)
    replaced[left] -= n
    replaced[right] -= n
    replaced[left] += 1
    replaced[right] += 1
    replaced[INDEX] = n
    replaced[DELIM] = 1
    replaced = +replaced  # drop zero and negative entries
    return description_length(counts) - description_length(replaced)


T1 = {"ab": 3, "abc": 2, "bc": 1}


def main():
    seqs = char_split(T1)
    counts = token_counts(T1, seqs)
    print("T1 token counts:", dict(sorted(counts.items())))
    print("T1 pair counts:", dict(sorted(all_pair_counts(T1, seqs).items())))
    print(f"DL(T1 chars) = {description_length(counts):.10f}")
    for pair in [("a", "b"), ("b", "c")]:
        print(
            f"pair {pair}: frq={frq(T1, seqs, pair)} "
            f"av={av(T1, seqs, pair)} "
            f"weight={containing_freq(T1, seqs, pair)} "
            f"n={pair_count(T1, seqs, pair)} "
            f"dlg={dlg(T1, seqs, pair):.10f}"
        )
    print("accessors (a,b):", accessor_sets(T1, seqs, ("a", "b")))
    print("accessors (b,c):", accessor_sets(T1, seqs, ("b", "c")))
    one = {"ab": 1}
    print(f"dlg (a,b) on {{ab:1}} = {dlg(one, char_split(one), ('a', 'b')):.10f}")


if __name__ == "__main__":
    main()
