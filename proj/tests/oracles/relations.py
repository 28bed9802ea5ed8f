#!/usr/bin/env python3
"""Reference relation counts for a vertical file, written from the pattern
descriptions alone. Prints node, relation, collocate, count (TSV, sorted)."""

import sys

PREPS = {"of", "in", "for", "to", "with", "on", "as", "into", "like", "about"}


def read(path):
    toks = []
    sent = 0
    for line in open(path, encoding="utf-8"):
        line = line.rstrip("\n").rstrip("\r")
        if line.startswith("<") and line.endswith(">"):
            if line.startswith("<s") or line.startswith("<doc"):
                sent += 1
            continue
        surface, lemma, pos = line.split("\t")
        toks.append((surface, lemma.lower(), pos, sent))
    return toks


def hits(toks, kind, forms):
    out = []
    for i, t in enumerate(toks):
        if kind == "lemma" and t[1] == forms[0]:
            out.append((i, i))
        elif kind == "initialism" and t[0] == forms[0]:
            out.append((i, i))
        elif (kind == "bigram" and i + 1 < len(toks) and t[1] == forms[0]
              and toks[i + 1][1] == forms[1] and toks[i + 1][3] == t[3]):
            out.append((i, i + 1))
    return out


def relations(toks, kind, forms):
    self_lemmas = {f.lower() for f in forms}
    counts = {}

    def add(rel, j):
        if toks[j][1] not in self_lemmas:
            key = (rel, toks[j][1])
            counts[key] = counts.get(key, 0) + 1

    for first, last in hits(toks, kind, forms):
        s = toks[first][3]
        head = toks[last][2]

        def ok(j):
            return 0 <= j < len(toks) and toks[j][3] == s

        j = first - 1
        while ok(j) and toks[j][2] in ("ADJ", "NOUN", "PROPN"):
            add("modifier_of", j)
            j -= 1
        if ok(last + 1) and toks[last + 1][2] in ("NOUN", "PROPN"):
            add("noun_modified_by", last + 1)
        j = last + 1
        if ok(j) and toks[j][1] == ",":
            j += 1
        if ok(j) and toks[j][1] in ("and", "or") and ok(j + 1) and toks[j + 1][2] == head:
            add("and_or", j + 1)
        j = first - 1
        if ok(j) and toks[j][1] in ("and", "or"):
            j -= 1
            if ok(j) and toks[j][1] == ",":
                j -= 1
            if ok(j) and toks[j][2] == head:
                add("and_or", j)
        if ok(first - 1) and toks[first - 1][2] == "ADP":
            add("prep_phrase_pre", first - 1)
        if ok(last + 1) and toks[last + 1][2] == "ADP":
            add("prep_phrase_post", last + 1)
    return counts


def main():
    toks = read(sys.argv[1])
    nodes = [("bigram", ["virtual", "reality"]), ("initialism", ["VR"]),
             ("lemma", ["anxiety"]), ("lemma", ["headset"])]
    for kind, forms in nodes:
        for (rel, lemma), n in sorted(relations(toks, kind, forms).items()):
            print(f"{' '.join(forms)}\t{rel}\t{lemma}\t{n}")


if __name__ == "__main__":
    main()
