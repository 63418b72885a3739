#!/usr/bin/env python3
"""Regenerate data/categories.json and data/affect_lexicon.csv.

Inputs are the category table shipped in the `empath` sdist
(empath/data/categories.tsv, MIT) and the adjective sentiment lexicon shipped
in the `textblob` wheel (textblob/en/en-sentiment.xml, PDDL):

    pip download --no-deps empath textblob
    python3 tools/build_lexicons.py --categories .../categories.tsv \
        --sentiment .../en-sentiment.xml --out data/
"""
import argparse
import collections
import json
import pathlib
import xml.etree.ElementTree as ET


def build_categories(tsv: pathlib.Path) -> dict:
    out = {}
    for line in tsv.read_text(encoding="utf-8").splitlines():
        fields = [f.strip().lower() for f in line.split("\t") if f.strip()]
        if not fields:
            continue
        name, words = fields[0], fields[1:]
        # Multi-word seeds never match a single token.
        out[name] = sorted({w for w in words if " " not in w})
    return dict(sorted(out.items()))


def build_affect(xml_path: pathlib.Path) -> list:
    senses = collections.defaultdict(list)
    for word in ET.parse(xml_path).getroot().iter("word"):
        form = word.get("form", "").strip().lower()
        if not form or " " in form:
            continue
        senses[form].append((float(word.get("polarity")), float(word.get("subjectivity"))))
    rows = []
    for form in sorted(senses):
        pol = sum(p for p, _ in senses[form]) / len(senses[form])
        sub = sum(s for _, s in senses[form]) / len(senses[form])
        rows.append((form, round(pol, 6), round(sub, 6)))
    return rows


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--categories", type=pathlib.Path, required=True)
    ap.add_argument("--sentiment", type=pathlib.Path, required=True)
    ap.add_argument("--out", type=pathlib.Path, default=pathlib.Path("data"))
    args = ap.parse_args()

    cats = build_categories(args.categories)
    (args.out / "categories.json").write_text(
        json.dumps(cats, indent=1, ensure_ascii=False) + "\n", encoding="utf-8")

    with (args.out / "affect_lexicon.csv").open("w", encoding="utf-8") as fh:
        fh.write("word,polarity,subjectivity\n")
        for form, pol, sub in build_affect(args.sentiment):
            fh.write(f"{form},{pol:g},{sub:g}\n")


if __name__ == "__main__":
    main()
