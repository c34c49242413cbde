"""Exact cluster metrics for the musketeers-mini fixture.

Links every pair of names that share a name part, closes the relation by
repeated merging, and scores the result against the annotated table with
exhaustive pair enumeration and per-item B-cubed sums. Prints fractions.
"""

import csv
import os
import unicodedata
from fractions import Fraction
from itertools import combinations

HERE = os.path.dirname(os.path.abspath(__file__))
HONORIFICS = {h.lower() for h in [
    "Mr.", "Mrs.", "Ms.", "M.", "Mme.", "Madame", "Mademoiselle", "Monsieur", "Monseigneur", "Lord", "Lady",
    "Sir", "Dame", "Dr.", "St.", "Saint", "Comte", "Comtesse", "Duc", "Duchesse", "Cardinal", "Captain", "Milady"]}
ARTICLES = {"le", "la", "les", "the", "l'"}
PARTICLES = {"de", "du", "des", "la", "le", "les", "d'", "von", "van", "of", "the", "ter", "al"}


def parts(name):
    toks = unicodedata.normalize("NFC", name).split()
    i = 0
    while i < len(toks):
        if toks[i].lower() in HONORIFICS:
            i += 1
        elif i > 0 and toks[i].lower() in ARTICLES and i + 1 < len(toks) and toks[i + 1].lower() in HONORIFICS:
            i += 1
        else:
            break
    rest = toks[i:] if i < len(toks) else toks
    out = set()
    for t in rest:
        t = t.rstrip(",")
        if t.lower() not in PARTICLES and len(t) >= 3:
            out.add(t.casefold())
    return out


def closure(keys, linked):
    groups = [{k} for k in keys]
    changed = True
    while changed:
        changed = False
        for a, b in combinations(range(len(groups)), 2):
            if any(linked(x, y) for x in groups[a] for y in groups[b]):
                groups[a] |= groups[b]
                del groups[b]
                changed = True
                break
    return groups


def metrics(pred, gold):
    def label(groups):
        return {k: i for i, g in enumerate(groups) for k in g}
    lp, lg = label(pred), label(gold)
    keys = sorted(lp)
    pp = {(a, b) for a, b in combinations(keys, 2) if lp[a] == lp[b]}
    gp = {(a, b) for a, b in combinations(keys, 2) if lg[a] == lg[b]}
    p = Fraction(len(pp & gp), len(pp)) if pp else Fraction(1)
    r = Fraction(len(pp & gp), len(gp)) if gp else Fraction(1)
    f = 2 * p * r / (p + r) if p + r else Fraction(0)
    bp = br = Fraction(0)
    for k in keys:
        ps = {x for x in keys if lp[x] == lp[k]}
        gs = {x for x in keys if lg[x] == lg[k]}
        bp += Fraction(len(ps & gs), len(ps))
        br += Fraction(len(ps & gs), len(gs))
    bp /= len(keys)
    br /= len(keys)
    bf = 2 * bp * br / (bp + br)
    return p, r, f, bp, br, bf


def main():
    with open(os.path.join(HERE, "musketeers-mini", "alias_table.csv"), encoding="utf-8") as f:
        rows = list(csv.DictReader(f))
    by_type = {}
    for r in rows:
        by_type.setdefault(r["type"], []).append(r)
    pred, gold = [], []
    for t, rs in by_type.items():
        keys = [(r["name"], t) for r in rs]
        pred += closure(keys, lambda a, b: bool(parts(a[0]) & parts(b[0])))
        canon = {}
        for r in rs:
            canon.setdefault(r["canonical"].strip(), set()).add((r["name"], t))
        gold += list(canon.values())
    names = ["pairwise_precision", "pairwise_recall", "pairwise_f1", "b3_precision", "b3_recall", "b3_f1"]
    for n, v in zip(names, metrics(pred, gold)):
        print(f"{n} = {v} ~ {float(v):.9f}")
    for g in sorted(pred, key=lambda g: sorted(g)):
        if len(g) > 1:
            print(sorted(n for n, _ in g))


if __name__ == "__main__":
    main()
