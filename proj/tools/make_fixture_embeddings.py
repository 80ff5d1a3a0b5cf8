#!/usr/bin/env python3
"""Writes data/embeddings.txt: small deterministic word vectors for tests and demos.

Each word is placed near the centre of its syntactic-category cluster, with
per-word noise, so that cosine similarity behaves the way it does with real
pre-trained vectors (prepositions close to prepositions, and so on). Words
listed under two categories get the mean of both centres.
"""
import pathlib

import numpy as np

DIM = 24
SEED = 7
DATA = pathlib.Path(__file__).resolve().parent.parent / "data"


def read_list(path):
    out = []
    for line in path.read_text().splitlines():
        line = line.strip().lower()
        if line and not line.startswith("#") and " " not in line:
            out.append(line)
    return out


NOUNS = """
action index map time line server port camera bit set employee name token parser stack size user value
file bytes header frame request hash config counter input record item cache state report string identifier
class id http xml manager builder event queue connection pool account array global index count total
timeout list width callback buffer vec layer mask version array path node tree page stream widget window
owner data image color texture surface mouse threshold error json key pair output height function language
record child thing process access type length
""".split()

VERBS = """
adjust open set get read write start stop parse render handle compute load update validate create delete
sort clear reset print run execute save retry convert wait move notify find tell draw close init implement
develop count map index list process access type put call build check has is
""".split()

ADJECTIVES = """
empty valid invalid max dynamic global current default waiting running total new old visible dirty open
consistent main static local binary quick fast slow full raw
""".split()

ADVERBS = """
quickly safely now again eventually always never often soon already
""".split()

# Short prefixes that tend to start names rather than carry meaning.
PREFIXES = """
m p g f n b dw sz gimp glew gl s i
""".split()


def main():
    rng = np.random.default_rng(SEED)
    categories = {
        "noun": NOUNS,
        "verb": VERBS,
        "adj": ADJECTIVES,
        "adv": ADVERBS,
        "preposition": read_list(DATA / "closed" / "preposition.txt"),
        "conjunction": read_list(DATA / "closed" / "conjunction.txt"),
        "determiner": read_list(DATA / "closed" / "determiner.txt"),
        "pronoun": read_list(DATA / "closed" / "pronoun.txt"),
        "prefix": PREFIXES,
    }
    centres = {name: rng.normal(size=DIM) for name in categories}
    memberships = {}
    for name, words in categories.items():
        for w in words:
            memberships.setdefault(w, [])
            if name not in memberships[w]:
                memberships[w].append(name)

    lines = []
    for word in sorted(memberships):
        centre = np.mean([centres[c] for c in memberships[word]], axis=0)
        vec = centre + 0.45 * rng.normal(size=DIM)
        lines.append(word + " " + " ".join(f"{v:.6f}" for v in vec))

    out = DATA / "embeddings.txt"
    out.write_text(f"{len(lines)} {DIM}\n" + "\n".join(lines) + "\n")
    print(f"wrote {len(lines)} vectors to {out}")


if __name__ == "__main__":
    main()
