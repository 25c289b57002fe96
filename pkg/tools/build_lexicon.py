"""Build the bundled word->tag lexicon.

Sources: Brill's lexicon (as redistributed with pattern3, BSD/MIT) plus
most-frequent tags counted over a Penn-tagged corpus sample for words the
lexicon lacks. Usage:

    python tools/build_lexicon.py BRILL_LEXICON TAGGED_CORPUS OUT.tsv.gz
"""
import collections
import gzip
import sys

sys.path.insert(0, "src")
from keyforge.text.tags import PENN_TAGS  # noqa: E402


def read_brill(path):
    lex = {}
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            if line.startswith(";;;"):
                continue
            parts = line.split()
            if len(parts) != 2:
                continue
            word, tag = parts
            tag = tag.split("|")[0]
            if tag in PENN_TAGS:
                lex[word] = tag
    return lex


def count_tagged(path):
    counts = collections.defaultdict(collections.Counter)
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            for item in line.split():
                word, _, tag = item.rpartition("/")
                if word and tag in PENN_TAGS:
                    counts[word][tag] += 1
    return counts


def main(brill, tagged, out):
    lex = read_brill(brill)
    for word, ctr in count_tagged(tagged).items():
        if word not in lex:
            # most frequent; alphabetical among ties
            lex[word] = min(ctr.items(), key=lambda kv: (-kv[1], kv[0]))[0]
    with gzip.GzipFile(out, "wb", mtime=0) as raw:
        for word in sorted(lex):
            if "\t" in word or "\n" in word:
                continue
            raw.write(f"{word}\t{lex[word]}\n".encode("utf-8"))
    print(f"{len(lex)} entries -> {out}")


if __name__ == "__main__":
    main(*sys.argv[1:4])
