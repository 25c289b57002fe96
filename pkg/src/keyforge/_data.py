"""Access to the files bundled under ``keyforge/data``."""
import functools
import gzip
from importlib import resources


def open_text(name):
    ref = resources.files("keyforge") / "data" / name
    if name.endswith(".gz"):
        return gzip.open(ref.open("rb"), "rt", encoding="utf-8")
    return ref.open("r", encoding="utf-8")


def read_lines(name):
    """Non-empty, non-comment lines of a bundled file, stripped."""
    with open_text(name) as fh:
        return [ln.strip() for ln in fh if ln.strip() and not ln.startswith("#")]


@functools.lru_cache(maxsize=None)
def stopwords():
    return frozenset(read_lines("stopwords_en.txt"))


@functools.lru_cache(maxsize=None)
def abbreviations():
    return frozenset(w.lower() for w in read_lines("abbreviations.txt"))


@functools.lru_cache(maxsize=None)
def irregular_plurals():
    table = {}
    for line in read_lines("irregular_plurals.tsv"):
        plural, singular = line.split("\t")
        table[plural] = singular
    return table


@functools.lru_cache(maxsize=None)
def lexicon():
    table = {}
    with open_text("lexicon.tsv.gz") as fh:
        for line in fh:
            word, _, tag = line.rstrip("\n").partition("\t")
            if word and tag:
                table.setdefault(word, tag)
    return table


def english_words():
    """The bundled dictionary wordlist (Unix web2, lowercased)."""
    return frozenset(read_lines("words_en.txt.gz"))


def demo_path(*parts):
    """Filesystem path of a bundled demo asset, e.g. ``demo_path("thesauri", "cs.txt")``."""
    return str(resources.files("keyforge").joinpath("data", "demo", *parts))
