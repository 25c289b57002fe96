"""Noun-plural lemmatizer; every other word class is only lowercased."""
import functools

from .. import _data

PLURAL_TAGS = frozenset({"NNS", "NNPS"})

_SIBILANT = ("s", "x", "z", "ch", "sh")
_ES_AFTER = ("sses", "xes", "zzes", "ches", "shes")
_KEEP_S = ("ss", "us", "is")


def _known_noun(word):
    return _data.lexicon().get(word) in ("NN", "NNP")


def singularize(word):
    """Singular form of a lowercase plural noun."""
    irregular = _data.irregular_plurals()
    if word in irregular:
        return irregular[word]
    if len(word) <= 3 or word.endswith(_KEEP_S):
        return word
    if word.endswith("ies"):
        return word[:-1] if _known_noun(word[:-1]) else word[:-3] + "y"
    if word.endswith("ves") and _known_noun(word[:-3] + "f"):
        return word[:-3] + "f"
    if word.endswith("oes") and _known_noun(word[:-2]):
        return word[:-2]
    if word.endswith("es") and word[:-2].endswith(_SIBILANT):
        strip_s, strip_es = word[:-1], word[:-2]
        # prefer whichever reading the lexicon knows as a noun: "databases", "classes"
        if _known_noun(strip_s):
            return strip_s
        if _known_noun(strip_es) or word.endswith(_ES_AFTER):
            return strip_es
        return strip_s
    if word.endswith("s"):
        return word[:-1]
    return word


@functools.lru_cache(maxsize=65536)
def lemmatize(surface, tag):
    word = surface.lower()
    if tag in PLURAL_TAGS:
        return singularize(word)
    if tag == "NNP" and _data.lexicon().get(word) == "NNS":
        # title-cased common plural: "Neural Networks"
        return singularize(word)
    return word
