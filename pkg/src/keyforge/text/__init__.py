"""Tokenization, sentence splitting, tagging, lemmatization and stemming."""
from dataclasses import dataclass

from .lemma import lemmatize
from .porter import stem
from .segment import Token, is_numeric, is_punct, sentence_spans, split_sentences, tokenize
from .tagger import tag_words
from .tags import PENN_TAGS

__all__ = [
    "Document", "PENN_TAGS", "TaggedToken", "Token", "analyze", "is_numeric",
    "is_punct", "lemmatize", "normalize_phrase", "normalize_text", "pos_tag",
    "split_sentences", "sentence_spans", "stem", "tokenize",
]


@dataclass(frozen=True)
class TaggedToken:
    token: Token
    tag: str
    lemma: str
    stem: str

    @property
    def surface(self):
        return self.token.surface


@dataclass(frozen=True)
class Document:
    """A tokenized, sentence-split and tagged text."""
    text: str
    sentences: tuple  # tuple of tuples of TaggedToken
    doc_id: str = ""

    @property
    def tokens(self):
        return [t for sent in self.sentences for t in sent]


def pos_tag(tokens):
    """Tag tokens, one sentence at a time, returning TaggedTokens."""
    out = []
    start = 0
    while start < len(tokens):
        end = start
        while end < len(tokens) and tokens[end].sentence_index == tokens[start].sentence_index:
            end += 1
        sent = tokens[start:end]
        tags = tag_words([t.surface for t in sent])
        out.extend(TaggedToken(t, tag, lemmatize(t.surface, tag), stem(t.surface))
                   for t, tag in zip(sent, tags))
        start = end
    return out


def analyze(text, doc_id=""):
    """Split, tokenize and tag ``text`` into a :class:`Document`."""
    sentences = []
    for idx, (a, b) in enumerate(sentence_spans(text)):
        toks = tokenize(text[a:b], offset=a, sentence_index=idx)
        if toks:
            sentences.append(tuple(pos_tag(toks)))
    return Document(text, tuple(sentences), doc_id)


def normalize_phrase(tokens, mode="lemma"):
    """Join per-token lemmas (``mode="lemma"``) or stems (``mode="stem"``)."""
    if mode == "lemma":
        parts = [t.lemma for t in tokens]
    elif mode == "stem":
        parts = [t.stem for t in tokens]
    else:
        raise ValueError(f"unknown normalization mode {mode!r}")
    return " ".join(parts).lower()


def normalize_text(phrase, mode="lemma"):
    """Normalize a free-standing phrase, tagging it out of context."""
    toks = tokenize(phrase)
    if not toks:
        return ""
    return normalize_phrase(pos_tag(toks), mode)
