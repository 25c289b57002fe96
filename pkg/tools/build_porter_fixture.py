"""Freeze Porter test vectors using NLTK's ORIGINAL_ALGORITHM mode as oracle.

    pip install --target /tmp/devtools nltk
    PYTHONPATH=/tmp/devtools python tools/build_porter_fixture.py TAGGED_CORPUS OUT.tsv
"""
import re
import sys

from nltk.stem.porter import PorterStemmer


def main(corpus, out):
    words = set()
    with open(corpus, encoding="utf-8") as fh:
        for line in fh:
            for item in line.split():
                w = item.rpartition("/")[0].lower()
                if len(w) > 2 and re.fullmatch("[a-z]+", w):
                    words.add(w)
    words.update(["extraction", "keyphrases", "machines", "networks", "studies",
                  "generalizations", "oscillators", "relational", "conditional"])
    ref = PorterStemmer(mode=PorterStemmer.ORIGINAL_ALGORITHM)
    with open(out, "w", encoding="utf-8") as fh:
        for w in sorted(words):
            fh.write(f"{w}\t{ref.stem(w)}\n")
    print(len(words), "vectors")


if __name__ == "__main__":
    main(*sys.argv[1:3])
