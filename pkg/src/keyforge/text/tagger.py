"""Deterministic lexicon + suffix-rule PoS tagger with a bigram correction pass."""
import re

from .. import _data
from .segment import is_numeric, is_punct

_PUNCT_TAG = {
    ".": ".", "!": ".", "?": ".",
    ",": ",",
    ":": ":", ";": ":", "-": ":", "--": ":", "...": ":", "…": ":",
    "(": "(", "[": "(", "{": "(",
    ")": ")", "]": ")", "}": ")",
    "``": "``", "“": "``", "‘": "``",
    "''": "''", "”": "''", "’": "''", '"': "''", "'": "''", "`": "``",
    "$": "$", "#": "#",
}

# (suffix, tag), first match wins; checked on the lowercased word
_SUFFIX_RULES = (
    ("ing", "VBG"),
    ("ed", "VBN"),
    ("ly", "RB"),
    ("ness", "NN"), ("ment", "NN"), ("tion", "NN"), ("sion", "NN"),
    ("ity", "NN"), ("ism", "NN"), ("ship", "NN"), ("ance", "NN"),
    ("ence", "NN"), ("ology", "NN"), ("graphy", "NN"),
    ("ous", "JJ"), ("ful", "JJ"), ("ive", "JJ"), ("able", "JJ"),
    ("ible", "JJ"), ("ical", "JJ"), ("less", "JJ"), ("ish", "JJ"),
    ("ic", "JJ"), ("al", "JJ"),
    ("ss", "NN"), ("us", "NN"), ("is", "NN"),
    ("s", "NNS"),
)
_MIN_STEM = 3

_BE = frozenset({"be", "is", "are", "was", "were", "been", "being", "am", "'s", "'re", "'m"})
_HAVE = frozenset({"have", "has", "had", "having", "'ve", "'d"})
_NOMINAL_LEFT = frozenset({"DT", "PRP$", "POS", "JJ", "JJR", "JJS", "WP$"})

_HAS_DIGIT = re.compile(r"\d")


def _guess(word, sentence_initial):
    """Tag for a word absent from the lexicon."""
    if is_numeric(word):
        return "CD"
    if _HAS_DIGIT.search(word):
        return "NN"
    core = word.strip("-")
    if "-" in core:
        last = core.rsplit("-", 1)[1]
        tag = _lookup(last) or _guess(last, True)
        return tag if tag in ("NN", "NNS") else "JJ"
    if word[0].isupper() and (not sentence_initial or (len(word) > 1 and word.isupper())):
        return "NNP"
    low = word.lower()
    for suffix, tag in _SUFFIX_RULES:
        if low.endswith(suffix) and len(low) - len(suffix) >= _MIN_STEM:
            return tag
    return "NN"


def _lookup(word):
    lex = _data.lexicon()
    tag = lex.get(word)
    if tag is None and word != word.lower():
        tag = lex.get(word.lower())
    return tag


def _initial_tag(word, sentence_initial):
    if word in _PUNCT_TAG:
        return _PUNCT_TAG[word]
    if is_punct(word):
        return "SYM"
    tag = _data.lexicon().get(word)
    if tag is None and word[:1].isupper() and sentence_initial:
        tag = _data.lexicon().get(word.lower())
    if tag is None and word.isupper() and len(word) > 1:
        tag = "NNP"
    if tag is None and word != word.lower() and not word[:1].isupper():
        tag = _data.lexicon().get(word.lower())
    return tag or _guess(word, sentence_initial)


def _correct(words, tags):
    """Previous-tag bigram corrections, applied left to right in place."""
    for i in range(1, len(tags)):
        prev_w, prev_t = words[i - 1].lower(), tags[i - 1]
        w, t = words[i].lower(), tags[i]
        if prev_w in _BE and w.endswith("ing") and t in ("NN", "JJ"):
            tags[i] = "VBG"
        elif t == "VBD" and (prev_w in _BE or prev_w in _HAVE):
            tags[i] = "VBN"
        elif t == "VBD" and prev_t in ("DT", "PRP$"):
            tags[i] = "VBN"
        elif prev_t == "MD" and t in ("NN", "VBP"):
            tags[i] = "VB"
        elif prev_t == "TO" and t == "VBP":
            tags[i] = "VB"
        elif prev_t in _NOMINAL_LEFT and t in ("VB", "VBP"):
            tags[i] = "NN"
        elif prev_t in ("JJ", "JJR", "JJS") and t == "VBG":  # "deep learning"
            tags[i] = "NN"
    return tags


def tag_words(words):
    """Tag a sequence of word strings from a single sentence."""
    tags = [_initial_tag(w, i == 0) for i, w in enumerate(words)]
    return _correct(list(words), tags)
