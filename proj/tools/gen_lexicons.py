#!/usr/bin/env python3
"""Generate data/pos_lexicon.tsv and data/synonyms.tsv from a WordNet 3.0 dict directory.

Usage: gen_lexicons.py <wordnet-dict-dir> <out-dir> [--words N]

The WordNet dict directory is the one holding index.noun, data.noun, cntlist.rev, ...
(for example the copy bundled in the `wn==0.0.23` sdist under wn/data/wordnet-3.0).
"""
import argparse
import collections
import os
import re

POS_FILES = {"n": "noun", "v": "verb", "a": "adj", "r": "adv"}
PROPERTY = {"n": "noun", "v": "verb", "a": "adjective", "s": "adjective", "r": "adverb"}
# Tie-break order when two parts of speech have the same tag counts.
PREFERENCE = ["n", "v", "a", "r"]

OTHER = """a an the this that these those my your his her its our their me him us them it
he she we they you i some any each every no s t
zero one two three four five six seven eight nine ten eleven twelve hundred thousand million
""".split()
OTHER += list("bcdefghjklmnopqrstuvwxyz")
PREPOSITIONS = """about above across after against along among around as at before behind below
beneath beside between beyond by despite down during except for from in inside into like near
of off on onto out outside over past per since through throughout till to toward towards under
underneath until up upon via with within without""".split()
CONJUNCTIONS = """and or but nor so yet if because although though while whereas unless whether
than either neither""".split()

WORD_RE = re.compile(r"^[a-z]+$")


def read_index(dict_dir):
    tagged = collections.defaultdict(dict)  # word -> pos -> (tagsense_cnt, synset_cnt)
    for pos, name in POS_FILES.items():
        with open(os.path.join(dict_dir, "index." + name), encoding="utf-8") as f:
            for line in f:
                if line.startswith(" "):
                    continue
                parts = line.split()
                lemma, synset_cnt, p_cnt = parts[0], int(parts[2]), int(parts[3])
                tagsense_cnt = int(parts[5 + p_cnt])
                tagged[lemma][pos] = (tagsense_cnt, synset_cnt)
    return tagged


SS_TYPE = {"1": "n", "2": "v", "3": "a", "4": "r", "5": "a"}


def read_counts(dict_dir):
    """SemCor tag counts: total per lemma and per (lemma, pos)."""
    counts = collections.Counter()
    by_pos = collections.Counter()
    with open(os.path.join(dict_dir, "cntlist.rev"), encoding="utf-8") as f:
        for line in f:
            key, _, cnt = line.split()
            lemma, rest = key.split("%", 1)
            counts[lemma] += int(cnt)
            by_pos[(lemma, SS_TYPE[rest[0]])] += int(cnt)
    return counts, by_pos


def read_synsets(dict_dir):
    synsets = []
    for name in POS_FILES.values():
        with open(os.path.join(dict_dir, "data." + name), encoding="utf-8") as f:
            for line in f:
                if line.startswith(" "):
                    continue
                parts = line.split()
                w_cnt = int(parts[3], 16)
                words = [parts[4 + 2 * i].lower() for i in range(w_cnt)]
                words = [re.sub(r"\(.*\)$", "", w) for w in words]
                synsets.append(words)
    return synsets


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("dict_dir")
    ap.add_argument("out_dir")
    ap.add_argument("--words", type=int, default=10000)
    ap.add_argument("--max-synonyms", type=int, default=12)
    args = ap.parse_args()

    tagged = read_index(args.dict_dir)
    counts, by_pos = read_counts(args.dict_dir)

    candidates = [w for w in tagged if WORD_RE.match(w) and len(w) > 1]
    candidates.sort(key=lambda w: (-counts[w], w))
    chosen = set(candidates[: args.words])

    lexicon = {}
    for w in chosen:
        per_pos = tagged[w]
        best = max(per_pos, key=lambda p: (by_pos[(w, p)], per_pos[p][0], per_pos[p][1], -PREFERENCE.index(p)))
        lexicon[w] = PROPERTY[best]
    for w in CONJUNCTIONS:
        lexicon[w] = "conjunction"
    for w in PREPOSITIONS:
        lexicon[w] = "preposition"
    for w in OTHER:
        lexicon[w] = "other"

    with open(os.path.join(args.out_dir, "pos_lexicon.tsv"), "w", encoding="utf-8", newline="\n") as f:
        f.write("# word\tproperty  (generated by tools/gen_lexicons.py from WordNet 3.0)\n")
        for w in sorted(lexicon):
            f.write(f"{w}\t{lexicon[w]}\n")

    synonyms = collections.defaultdict(set)
    for words in read_synsets(args.dict_dir):
        words = [w for w in words if WORD_RE.match(w)]
        for w in words:
            if w in lexicon:
                synonyms[w].update(x for x in words if x != w)

    with open(os.path.join(args.out_dir, "synonyms.tsv"), "w", encoding="utf-8", newline="\n") as f:
        f.write("# word\tsyn1,syn2,...  (generated by tools/gen_lexicons.py from WordNet 3.0)\n")
        for w in sorted(synonyms):
            syns = sorted(synonyms[w], key=lambda x: (-counts[x], x))[: args.max_synonyms]
            if syns:
                f.write(f"{w}\t{','.join(syns)}\n")


if __name__ == "__main__":
    main()
