"""Build the fixture corpora and golden files.

Story text is written in a bracket markup, one sentence per line:
``[CHR D'Artagnan] rode to [LOC Paris] .`` Lines starting with ``#`` are
comments. The markup is rendered to CoNLL files, which are then parsed
again from disk, independently of the markup, to produce the golden entity
and mention lists.

Run from this directory: ``python3 generate.py``.
"""

import csv
import io
import os
import re
import unicodedata

HERE = os.path.dirname(os.path.abspath(__file__))
TYPES = ["CHR", "GRP", "LOC", "MSC", "ORG"]

# ---------------------------------------------------------------- markup


def render(markup, sep="\t"):
    """Markup text (sentences separated by newlines) to CoNLL text."""
    out = []
    first = True
    for raw in markup.strip("\n").split("\n"):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            out.append(line)
            continue
        if not first:
            out.append("")
        first = False
        for tok, tag in tag_sentence(line):
            out.append(f"{tok}{sep}{tag}")
    return "\n".join(out) + "\n"


def tag_sentence(line):
    toks = []
    pos = 0
    for m in re.finditer(r"\[(\w+) ([^\]]+)\]", line):
        toks += [(t, "O") for t in line[pos:m.start()].split()]
        words = m.group(2).split()
        toks.append((words[0], "B-" + m.group(1)))
        toks += [(w, "I-" + m.group(1)) for w in words[1:]]
        pos = m.end()
    toks += [(t, "O") for t in line[pos:].split()]
    return toks


# ---------------------------------------------------------------- oracle


def parse_conll(text):
    """Sentences as lists of (token, tag); comments skipped."""
    sentences, cur = [], []
    for line in text.split("\n"):
        if not line.strip():
            if cur:
                sentences.append(cur)
                cur = []
            continue
        cols = line.split()
        if line.startswith("#") and not (len(cols) == 2 and re.fullmatch(r"O|[BI]-(CHR|GRP|LOC|MSC|ORG)", cols[1])):
            continue
        assert len(cols) == 2, line
        cur.append((unicodedata.normalize("NFC", cols[0]), cols[1]))
    if cur:
        sentences.append(cur)
    return sentences


def mentions_of(chapters):
    """(surface, type, chapter, line, start, end) in document order."""
    rows = []
    for ci, sentences in enumerate(chapters, 1):
        for li, sent in enumerate(sentences, 1):
            k = 0
            while k < len(sent):
                tag = sent[k][1]
                if tag == "O":
                    k += 1
                    continue
                etype = tag[2:]
                start = k
                k += 1
                while k < len(sent) and sent[k][1] == "I-" + etype:
                    k += 1
                surface = " ".join(t for t, _ in sent[start:k])
                rows.append((surface, etype, ci, li, start, k - 1))
    return rows


def collation_key(name, etype):
    return ("".join(c.lower() for c in name), name, TYPES.index(etype))


def entity_rows(mentions):
    counts = {}
    for m in mentions:
        counts[(m[0], m[1])] = counts.get((m[0], m[1]), 0) + 1
    keys = sorted(counts, key=lambda k: collation_key(*k))
    return [(n, t, counts[(n, t)]) for n, t in keys]


def csv_text(header, rows):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for r in rows:
        w.writerow(r)
    return buf.getvalue()


ENTITY_HEADER = ["name", "type", "frequency", "canonical", "metadata"]
MENTION_HEADER = ["name", "type", "chapter", "line", "token_start", "token_end"]


def write(path, text):
    os.makedirs(os.path.dirname(path), exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="") as f:
        f.write(text)


def build(name, chapters_markup, canon=None, golden_lists=False, extra_rows=(), drop=(), freq_override=None, sep="\t"):
    """Write the corpus, optional golden lists and an annotated table.

    `canon` maps surface (or (surface, type)) to canonical; '' leaves blank.
    `extra_rows` are appended table rows (name, type, freq, canonical);
    `drop` removes keys from the table; `freq_override` patches counts.
    """
    base = os.path.join(HERE, name)
    for i, markup in enumerate(chapters_markup, 1):
        write(os.path.join(base, "corpus", f"chapter_{i:02d}.conll"), render(markup, sep))
    chapters = []
    for i in range(1, len(chapters_markup) + 1):
        with open(os.path.join(base, "corpus", f"chapter_{i:02d}.conll"), encoding="utf-8") as f:
            chapters.append(parse_conll(f.read()))
    mentions = mentions_of(chapters)
    ents = entity_rows(mentions)
    if golden_lists:
        write(os.path.join(base, "entity_list.csv"), csv_text(ENTITY_HEADER, [(n, t, c, "", "") for n, t, c in ents]))
        write(os.path.join(base, "mention_list.csv"), csv_text(MENTION_HEADER, mentions))
    if canon is not None:
        rows = []
        for n, t, c in ents:
            if (n, t) in drop:
                continue
            value = canon.get((n, t), canon.get(n))
            assert value is not None, f"{name}: no canonical for {n}/{t}"
            if freq_override and (n, t) in freq_override:
                c = freq_override[(n, t)]
            rows.append((n, t, c, value, ""))
        rows += [(n, t, c, v, "") for n, t, c, v in extra_rows]
        write(os.path.join(base, "alias_table.csv"), csv_text(ENTITY_HEADER, rows))
    return mentions, ents


# ---------------------------------------------------------------- clean

CLEAN = [
    """
# The Road to Paris
[CHR D'Artagnan] left [LOC Gascony] for [LOC Paris] on a yellow horse .
At [LOC Meung] a stranger laughed at the horse , and [CHR D'Artagnan] drew his sword .
The stranger spoke with [CHR Milady] and rode away toward [LOC Picardy] .
In [LOC Paris] , [CHR Monsieur de Tréville] received the young [GRP Gascon] .
[CHR Tréville] served the [ORG King's Musketeers] and distrusted the [ORG Cardinal's Guards] .
[CHR Athos] , [CHR Porthos] and [CHR Aramis] were waiting at the [ORG Golden Lily] .
[CHR Porthos] boasted of his baldric while [CHR Aramis] read [MSC Augustinus] .
[CHR Monsieur Athos] asked for a bottle of [MSC Bordeaux] .
The [GRP Englishmen] in [LOC London] knew nothing of it .
""",
    """
# The Mercer's Wife
[CHR Constance] hid in the house on the [LOC Rue des Fossoyeurs] .
[CHR Madame Bonacieux] trusted [CHR D'Artagnan] with a letter for [CHR Buckingham] .
[CHR Mme. Bonacieux] feared the [ORG Cardinal's Guards] .
[CHR Cardinal Richelieu] spoke to [CHR Milady] of the [GRP English] .
[CHR Monseigneur the Cardinal] wanted the studs back from [LOC London] .
[CHR Comte de Wardes] met [CHR Milady] at the [ORG Jolly Miller] .
[CHR De Wardes] spoke [MSC English] with an [GRP Englishman] .
[CHR Constance Bonacieux] prayed to [CHR God] .
[CHR Planchet] brought [MSC champagne] from the [ORG Post] .
""",
    """
# The Studs
The [GRP Englishwoman] at [LOC Calais] sold a bottle of [MSC Bordeaux] .
[CHR D'Artagnan] and [CHR Planchet] crossed to [LOC England] .
[CHR Buckingham] returned the studs , and [ORG France] owed him nothing .
[CHR Lady Clarik] watched from [LOC Bordeaux] .
[GRP Gascons] and [GRP Englishmen] drank together .
[CHR Athos] remembered the [CHR Comte de la Fère] he had been .
[CHR M. de Wardes] recovered in [LOC Paris] .
Nobody in the [GRP House of Montmorency] had heard of the [MSC Iliad] .
[CHR Francis I] had built the palace , said [CHR Aramis] .
# end of chapter
""",
]

CLEAN_CANON = {
    "D'Artagnan": "Charles de Batz de Castelmore, dit d'Artagnan",
    "Milady": "Anne de Breuil",
    "Lady Clarik": "Anne de Breuil",
    "Monsieur de Tréville": "Jean-Armand du Peyrer, comte de Troisville",
    "Tréville": "Jean-Armand du Peyrer, comte de Troisville",
    "Athos": "Olivier de La Fère, dit Athos",
    "Monsieur Athos": "Olivier de La Fère, dit Athos",
    "Comte de la Fère": "Olivier de La Fère, dit Athos",
    "Porthos": "Porthos",
    "Aramis": "Aramis",
    "Constance": "Constance Bonacieux",
    "Constance Bonacieux": "Constance Bonacieux",
    "Madame Bonacieux": "Constance Bonacieux",
    "Mme. Bonacieux": "Constance Bonacieux",
    "Buckingham": "George Villiers, Duke of Buckingham",
    "Cardinal Richelieu": "Armand Jean du Plessis, duc de Richelieu",
    "Monseigneur the Cardinal": "Armand Jean du Plessis, duc de Richelieu",
    "Comte de Wardes": "Comte de Wardes",
    "De Wardes": "Comte de Wardes",
    "M. de Wardes": "Comte de Wardes",
    "God": "God",
    "Planchet": "Planchet",
    "Francis I": "Francis I of France",
    "Gascon": "Gascons",
    "Gascons": "Gascons",
    "Englishmen": "Englishmen",
    "Englishman": "Englishmen",
    "Englishwoman": "Englishmen",
    ("English", "GRP"): "Englishmen",
    ("English", "MSC"): "English language",
    "House of Montmorency": "House of Montmorency",
    "Gascony": "Gascony",
    "Paris": "Paris",
    "Meung": "Meung",
    "Picardy": "Picardy",
    "London": "London",
    "Rue des Fossoyeurs": "Rue des Fossoyeurs",
    "Calais": "Calais",
    "England": "England",
    ("Bordeaux", "LOC"): "Bordeaux",
    ("Bordeaux", "MSC"): "Bordeaux wine",
    "Augustinus": "C. Jansenius's Augustinus",
    "champagne": "Champagne wine",
    "Iliad": "Homer's Iliad",
    "King's Musketeers": "King's Musketeers",
    "Cardinal's Guards": "Cardinal's Guards",
    "Golden Lily": "Inn of the Golden Lily",
    "Jolly Miller": "Hostel of the Jolly Miller",
    "Post": "Tavern of the Post",
    "France": "Kingdom of France",
}

# ---------------------------------------------------------------- musketeers-mini

# Surface forms with mention counts. The first eight characters use the
# forms of the naming-convention tables below; the rest of the cast fills
# out the mini-novel with its usual supporting characters.
MINI_CAST = [
    ("Constance Bonacieux", ["Constance", 3, "Constance Bonacieux", 2, "Madame Bonacieux", 2, "Mme. Bonacieux", 1]),
    ("Comte de Wardes", ["Comte de Wardes", 2, "De Wardes", 1, "M. de Wardes", 1, "Monsieur de Wardes", 1,
                         "Monsieur le Comte de Wardes", 1]),
    ("Monsieur Coquenard", ["Coquenard", 1, "M. Coquenard", 1, "Monsieur Coquenard", 1]),
    ("Anne de Breuil", ["Anne de Breuil", 1, "Charlotte Backson", 1, "Comtesse de la Fère", 1, "Comtesse de Winter", 1,
                        "Lady Clarik", 2, "Milady", 6, "Milady Clarik", 1, "Milady de Winter", 2]),
    ("Charles de Batz de Castelmore, dit d'Artagnan", ["D'Artagnan", 8, "Lord d'Artagnan", 1, "M. d'Artagnan", 2,
                                                       "Monsieur d'Artagnan", 2]),
    ("Olivier de La Fère, dit Athos", ["Athos", 5, "Comte de la Fère", 1, "Monsieur Athos", 1]),
    ("Armand Jean du Plessis, duc de Richelieu", ["Cardinal de Richelieu", 1, "Cardinal Richelieu", 2, "M. de Richelieu", 1,
                                                  "Monseigneur the Cardinal", 2, "Monseigneur the Cardinal Richelieu", 1]),
    ("Francis I of France", ["Francis I", 1, "Francis the First", 1]),
    ("Isaac de Portau, dit Porthos", ["Porthos", 4, "M. Porthos", 1, "Monsieur Porthos", 1]),
    ("Henri d'Aramitz, dit Aramis", ["Aramis", 4, "M. Aramis", 1, "Monsieur Aramis", 1]),
    ("Jean-Armand du Peyrer, comte de Troisville", ["Tréville", 2, "M. de Tréville", 2, "Monsieur de Tréville", 1,
                                                    "Captain de Tréville", 1]),
    ("George Villiers, Duke of Buckingham", ["Buckingham", 2, "Duke of Buckingham", 1, "Lord Buckingham", 1]),
    ("Comte de Rochefort", ["Rochefort", 2, "Comte de Rochefort", 1, "M. de Rochefort", 1]),
    ("Planchet", ["Planchet", 3]),
]

VERBS = ["waited near", "spoke with", "rode past", "wrote to", "watched", "dined with", "avoided", "thanked"]
PLACES = ["Paris", "Calais", "London", "La Rochelle"]


def mini_chapters():
    """Deterministic sentences pairing each mention with a place."""
    items = []
    for _, forms in MINI_CAST:
        for surface, n in zip(forms[::2], forms[1::2]):
            items += [surface] * n
    # interleave so every chapter sees many characters
    items = items[0::3] + items[1::3] + items[2::3]
    chapters = [[], [], []]
    for i, surface in enumerate(items):
        verb = VERBS[i % len(VERBS)]
        place = PLACES[i % len(PLACES)]
        chapters[i * 3 // len(items)].append(f"[CHR {surface}] {verb} someone in [LOC {place}] .")
    return ["\n".join(c) for c in chapters]


def mini_canon():
    canon = {p: p for p in PLACES}
    for target, forms in MINI_CAST:
        for surface in forms[::2]:
            canon[surface] = target
    return canon


# ---------------------------------------------------------------- defects

CASE_VARIANT = [
    """
[CHR God] heard the prayer , and [CHR Dieu] answered it .
[CHR Father] and [CHR Son] were named in the same breath .
""",
]

SUSPECT = [
    """
[CHR Potter] opened the door .
[CHR Potter!!!] shouted the crowd .
[CHR Potte] stepped outside .
[CHR autobus] came round the corner .
[CHR D'Artagnan] waved from [LOC Paris] .
[CHR Athos-] nodded .
""",
]

VALIDATION = [
    """
[CHR Athos] crossed [LOC Paris] .
[CHR Porthos] followed , and the I-CHR_ORPHAN
[CHR Aramis] stayed behind .
""",
    """
[CHR Planchet] saddled the horses for [CHR Athos] .
""",
]


def orphan_fix(text):
    # an I- tag with no opening B- tag, after an O token
    return text.replace("I-CHR_ORPHAN\tO", "Grimaud\tI-CHR")


def main():
    _, clean = build("clean", CLEAN, canon=CLEAN_CANON, golden_lists=True)
    build("musketeers-mini", mini_chapters(), canon=mini_canon(), golden_lists=True)
    build("case-variant", CASE_VARIANT, canon={"God": "God", "Dieu": "god", "Father": "God", "Son": "God"})
    build("suspect-names", SUSPECT, canon={
        "Potter": "Harry Potter", "Potter!!!": "Harry Potter", "Potte": "Harry Potter", "autobus": "Autobus",
        "D'Artagnan": "Charles de Batz de Castelmore, dit d'Artagnan", "Paris": "Paris", "Athos-": "Olivier de La Fère, dit Athos",
    })
    # validation defects: orphan I- tag, blank canonical, stale, missing, wrong count
    base = os.path.join(HERE, "validation-defects")
    build("validation-defects", VALIDATION)
    path = os.path.join(base, "corpus", "chapter_01.conll")
    with open(path, encoding="utf-8") as f:
        text = f.read()
    write(path, orphan_fix(text))
    with open(path, encoding="utf-8") as f:
        ch1 = parse_conll(f.read())
    with open(os.path.join(base, "corpus", "chapter_02.conll"), encoding="utf-8") as f:
        ch2 = parse_conll(f.read())
    # the oracle repairs the orphan as a B- tag, as the tool does
    ch1 = [[(t, "B" + g[1:] if g.startswith("I-") and (k == 0 or s[k - 1][1] == "O") else g) for k, (t, g) in enumerate(s)]
           for s in ch1]
    ents = entity_rows(mentions_of([ch1, ch2]))
    canon = {"Athos": "Olivier de La Fère, dit Athos", "Porthos": "Porthos", "Aramis": "", "Paris": "Paris",
             "Grimaud": "Grimaud"}
    rows = []
    for n, t, c in ents:
        if n == "Planchet":
            continue  # missing from the table
        if n == "Athos":
            c += 1  # wrong count
        rows.append((n, t, c, canon[n], ""))
    rows.append(("Bazin", "CHR", 1, "Bazin", ""))  # stale: not in the corpus
    write(os.path.join(base, "alias_table.csv"), csv_text(ENTITY_HEADER, rows))
    table_only()
    print("clean:", sum(c for _, _, c in clean), "mentions,", len(clean), "entities")


# ---------------------------------------------------------------- tables only

# Naming-convention examples as (type, canonical, forms). Italics in
# canonical forms are dropped. Demonym counts follow the majority-rule
# example: Englishman 36, Englishmen 10, Englishwoman 5.
NAMING_TABLES = [
    ("CHR", "Constance Bonacieux", ["Constance", "Constance Bonacieux", "Madame Bonacieux", "Mme. Bonacieux"]),
    ("CHR", "Comte de Wardes", ["Comte de Wardes", "De Wardes", "M. de Wardes", "Monsieur de Wardes",
                                "Monsieur le Comte de Wardes"]),
    ("CHR", "Monsieur Coquenard", ["Coquenard", "M. Coquenard", "Monsieur Coquenard"]),
    ("CHR", "Gaius Julius Caesar", ["Caesar"]),
    ("CHR", "Yakov Petrovitch Golyadkin", ["Yakov Petrovitch Golyadkin", "Yakov Petrovitch", "brother Yakov",
                                           "Mr. Golyadkin"]),
    ("CHR", "Anne de Breuil", ["Anne de Breuil", "Charlotte Backson", "Comtesse de la Fère", "Comtesse de Winter",
                               "Lady Clarik", "Milady", "Milady Clarik", "Milady de Winter"]),
    ("CHR", "Charles de Batz de Castelmore, dit d'Artagnan", ["D'Artagnan", "Lord d'Artagnan", "M. d'Artagnan",
                                                              "Monsieur d'Artagnan"]),
    ("CHR", "Olivier de La Fère, dit Athos", ["Athos", "Comte de la Fère", "Monsieur Athos"]),
    ("CHR", "Marcus Junius Brutus", ["Brutus"]),
    ("CHR", "Miguel de Cervantes", ["Cervantes"]),
    ("CHR", "Maximilien de Robespierre", ["Robespierre"]),
    ("CHR", "Armand Jean du Plessis, duc de Richelieu", ["Cardinal de Richelieu", "Cardinal Richelieu", "M. de Richelieu",
                                                         "Monseigneur the Cardinal", "Monseigneur the Cardinal Richelieu"]),
    ("CHR", "Francis I of France", ["Francis I", "Francis the First"]),
    ("CHR", "God", ["Dieu", "Father", "Gad", "God", "Holy Father", "Holy Ghost", "Son"]),
    ("CHR", "Satan", ["Beelzebub", "Devil", "Evil One", "Lucifer", "Prince of the Powers of the Air", "Satan"]),
    ("CHR", "Henri de Talleyrand, marquis de Chalais", ["Chalais"]),
    ("LOC", "America", ["America"]),
    ("LOC", "Amiens", ["Amiens"]),
    ("LOC", "Angers", ["Angers"]),
    ("LOC", "Angoutin", ["Angoutin"]),
    ("LOC", "Anjou", ["Anjou"]),
    ("LOC", "Abbey St. Germain", ["Abbey St. Germain"]),
    ("LOC", "Faubourg St. Germain", ["St. Germain"]),
    ("LOC", "Picardy", ["road to Picardy"]),
    ("LOC", "Road of Chaillot", ["road of Chaillot"]),
    ("LOC", "Newfoundland", ["Banks of Newfoundland"]),
    ("LOC", "Greenland", ["coast of Greenland"]),
    ("ORG", "Archduchy of Austria", ["Austria"]),
    ("ORG", "Kingdom of Denmark", ["Denmark"]),
    ("ORG", "Kingdom of France", ["France", "kingdom of France"]),
    ("ORG", "City of Paris", ["Paris"]),
    ("ORG", "Inn of the Golden Lily", ["Golden Lily"]),
    ("ORG", "Hostel of the Jolly Miller", ["Jolly Miller"]),
    ("ORG", "Tavern of the Post", ["Post"]),
    ("GRP", "House Condé", ["Condés"]),
    ("GRP", "House of Montmorency", ["Montmorency"]),
    ("GRP", "Andalusians", ["Andalusian"]),
    ("GRP", "Arabs", ["Arabian"]),
    ("GRP", "Assyrians", ["Assyrians"]),
    ("GRP", "Béarnese people", ["Béarnais", "Béarnese"]),
    ("GRP", "Berrichons", ["Berrichan", "Berrichon"]),
    ("GRP", "Englishmen", ["English", "Englishman", "Englishmen", "Englishwoman"]),
    ("MSC", "Bordeaux wine", ["Bordeaux"]),
    ("MSC", "Burgundy wine", ["Burgundy"]),
    ("MSC", "Chambertin wine", ["chambertin"]),
    ("MSC", "Champagne wine", ["champagne"]),
    ("MSC", "Chalais's conspiracy", ["Chalais"]),
    ("MSC", "Ancient Kingdom period", ["ancient kingdom"]),
    ("MSC", "Cho’n Delor era", ["Cho'n Delor"]),
    ("MSC", "C. Jansenius's Augustinus", ["Augustinus"]),
    ("MSC", "Homer's Iliad", ["Iliad"]),
    ("MSC", "Molière's L'avare", ["L'Avare"]),
    ("MSC", "St. Augustine's work", ["St. Augustine"]),
    ("MSC", "Bartholomew's work", ["St. Bartholomew"]),
    ("MSC", "St. Chrysostom's work", ["St. Chrysostom"]),
    ("MSC", "Hug me till you drug me, honey song", ["Hug me till you drug me, honey"]),
    ("MSC", "Three Weeks in a Helicopter movie", ["Three Weeks in a Helicopter"]),
    ("MSC", "Bible", ["Bible", "Scripture", "Scriptures", "Judith"]),
    ("MSC", "English language", ["English"]),
    ("MSC", "French language", ["French"]),
    ("MSC", "German language", ["German"]),
]
DEMONYM_COUNTS = {"Englishman": 36, "Englishmen": 10, "Englishwoman": 5}

# One seeded defect per lint rule; each line notes the rule it triggers.
LINT_DEFECTS = [
    ("Madame Bonacieux", "CHR", 2, "Madame Bonacieux"),  # CHR-HONORIFIC
    ("Constance Bonacieux", "CHR", 3, "Constance Bonacieux"),
    ("Francis I", "CHR", 1, "Francis I"),  # CHR-MONARCH
    ("Bonacieux", "GRP", 1, "Bonacieux"),  # GRP-HOUSE
    ("Englishman", "GRP", 36, "Englishman"),  # GRP-PLURAL
    ("Englishmen", "GRP", 10, "Englishman"),  # GRP-PLURAL
    ("France", "ORG", 4, "France"),  # ORG-NATURE
    ("English", "MSC", 2, "English"),  # MSC-LANG
    ("Bordeaux", "LOC", 3, "Bordeaux"),  # XTYPE-COLLIDE
    ("Bordeaux", "MSC", 1, "Bordeaux"),  # XTYPE-COLLIDE
]


def sort_rows(rows):
    return sorted(rows, key=lambda r: collation_key(r[0], r[1]))


def table_only():
    rows = [(form, t, DEMONYM_COUNTS.get(form, 1), canon, "")
            for t, canon, forms in NAMING_TABLES for form in forms]
    keys = [(r[0], r[1]) for r in rows]
    assert len(keys) == len(set(keys)), "duplicate key in the naming tables"
    write(os.path.join(HERE, "naming-conventions", "alias_table.csv"), csv_text(ENTITY_HEADER, sort_rows(rows)))
    rows = [(n, t, c, v, "") for n, t, c, v in LINT_DEFECTS]
    write(os.path.join(HERE, "lint-defects", "alias_table.csv"), csv_text(ENTITY_HEADER, sort_rows(rows)))


if __name__ == "__main__":
    main()
