"""Sentence splitting and tokenization.

Offsets are character indices into the source string (Python ``str``
positions), so ``source[tok.char_offset:tok.end] == tok.surface`` always holds.
"""
import re
from dataclasses import dataclass

from .. import _data

_BOUNDARY = re.compile(r"""[.!?]+["')\]”’]*(?=\s+["'(\[“‘]?[A-Z])""")
_PARAGRAPH = re.compile(r"\n[ \t\r\f\v]*\n")
_WS = re.compile(r"\S+")

# peeled off word edges as separate one-character tokens
_EDGE_PUNCT = set(".,;:!?()[]{}\"'`“”‘’«»…")
_CLITIC = re.compile(r"(?<=\w)(['’][sS])$")


@dataclass(frozen=True)
class Token:
    surface: str
    char_offset: int
    sentence_index: int = 0
    whitespace: str = ""

    @property
    def end(self):
        return self.char_offset + len(self.surface)


def _is_abbreviation(text, period_end):
    """True when the word ending at ``period_end`` is a known abbreviation
    or a single-letter initial such as ``J.``."""
    start = period_end
    while start > 0 and not text[start - 1].isspace():
        start -= 1
    word = text[start:period_end].lstrip("\"'([“‘").lower()
    if word in _data.abbreviations():
        return True
    return len(word) == 2 and word[0].isalpha() and word[1] == "."


def sentence_spans(text):
    """Return ``(start, end)`` character spans of the sentences in ``text``.

    A sentence ends at ``.``, ``!`` or ``?`` (plus closing quotes/brackets)
    when followed by whitespace and a capital letter, unless the period closes
    an abbreviation. Blank lines always end a sentence.
    """
    cuts = {m.start() for m in _PARAGRAPH.finditer(text)}
    for m in _BOUNDARY.finditer(text):
        terminal = m.group().rstrip("\"')]”’")
        if terminal == "." and _is_abbreviation(text, m.start() + 1):
            continue
        cuts.add(m.end())
    spans = []
    start = 0
    for cut in sorted(cuts) + [len(text)]:
        chunk = text[start:cut]
        stripped = chunk.strip()
        if stripped:
            lead = len(chunk) - len(chunk.lstrip())
            spans.append((start + lead, start + lead + len(stripped)))
        start = cut
    return spans


def split_sentences(text):
    return [text[a:b] for a, b in sentence_spans(text)]


def _split_chunk(chunk):
    """Split one whitespace-free chunk into (relative offset, surface) pieces."""
    if _is_known_abbrev(chunk):
        return [(0, chunk)]
    i, j = 0, len(chunk)
    lead = []
    while i < j and chunk[i] in _EDGE_PUNCT:
        lead.append((i, chunk[i]))
        i += 1
    trail = []
    while j > i and chunk[j - 1] in _EDGE_PUNCT:
        if _is_known_abbrev(chunk[i:j]):
            break
        j -= 1
        trail.append((j, chunk[j]))
    trail.reverse()
    core = []
    if i < j:
        word = chunk[i:j]
        m = _CLITIC.search(word)
        if m and m.start() > 0:
            core = [(i, word[: m.start()]), (i + m.start(), m.group(1))]
        else:
            core = [(i, word)]
    return lead + core + trail


def _is_known_abbrev(s):
    return s.lower() in _data.abbreviations()


def tokenize(sentence, offset=0, sentence_index=0):
    """Split a sentence into tokens.

    Whitespace separates chunks; leading and trailing punctuation characters
    become their own tokens, while hyphens and other inner characters stay
    attached (``state-of-the-art`` is one token). Known abbreviations keep
    their period and a final possessive ``'s`` is split off.
    """
    pieces = []
    for m in _WS.finditer(sentence):
        for rel, surface in _split_chunk(m.group()):
            pieces.append((m.start() + rel, surface))
    tokens = []
    for n, (start, surface) in enumerate(pieces):
        end = start + len(surface)
        nxt = pieces[n + 1][0] if n + 1 < len(pieces) else len(sentence)
        tokens.append(Token(surface, offset + start, sentence_index, sentence[end:nxt]))
    return tokens


def is_punct(surface):
    return not any(ch.isalnum() for ch in surface)


_NUMERIC = re.compile(r"^[+\-±]?(\d+([.,:/]\d+)*|[.,]\d+)%?$")


def is_numeric(surface):
    return bool(_NUMERIC.match(surface))
