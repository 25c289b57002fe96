"""Loaders for keyword datasets, thesauri, Wikipedia title lists and wordlists.

Every loader returns an immutable object that may be shared across threads
and worker processes.
"""
import logging
import re
from dataclasses import dataclass, field
from pathlib import Path

from . import _data
from .errors import EncodingError, MissingPairError
from .text import normalize_text

log = logging.getLogger(__name__)

MAX_TITLE_TOKENS = 3

_DISAMBIGUATION = re.compile(r"\s+\([^()]*\)$")


@dataclass(frozen=True)
class KeDataset:
    name: str
    documents: tuple  # ((doc_id, text), ...), sorted by doc_id
    gold: dict = field(default_factory=dict)

    def __len__(self):
        return len(self.documents)


@dataclass(frozen=True)
class Thesaurus:
    name: str
    terms: frozenset

    def __contains__(self, phrase):
        return phrase in self.terms

    def __len__(self):
        return len(self.terms)


@dataclass(frozen=True)
class EntityGazetteer:
    titles: frozenset
    removed_common_unigrams: int = 0

    def __contains__(self, phrase):
        return phrase in self.titles

    def __len__(self):
        return len(self.titles)


@dataclass(frozen=True)
class DictionarySet:
    words: frozenset

    def __contains__(self, word):
        return word in self.words

    def __len__(self):
        return len(self.words)


def _read_text(path):
    try:
        return Path(path).read_bytes().decode("utf-8")
    except UnicodeDecodeError as exc:
        raise EncodingError(f"{path}: not valid UTF-8 ({exc.reason} at byte {exc.start})") from None


def _read_lines(path):
    return [ln.strip() for ln in _read_text(path).splitlines() if ln.strip()]


def load_dataset(dir_path, name=None):
    """Load a ``docsutf8/*.txt`` + ``keys/*.key`` keyword dataset.

    Files are paired by basename. Each non-blank line of a key file is one
    gold keyword.
    """
    root = Path(dir_path)
    for sub in ("docsutf8", "keys"):
        if not (root / sub).is_dir():
            raise FileNotFoundError(f"{root}: no {sub}/ directory")
    docs = {p.stem: p for p in (root / "docsutf8").glob("*.txt")}
    keys = {p.stem: p for p in (root / "keys").glob("*.key")}
    unpaired = sorted(docs.keys() ^ keys.keys())
    if unpaired:
        shown = ", ".join(unpaired[:5]) + (" ..." if len(unpaired) > 5 else "")
        raise MissingPairError(f"{root}: {len(unpaired)} unpaired file(s): {shown}")
    documents = tuple((doc_id, _read_text(docs[doc_id])) for doc_id in sorted(docs))
    gold = {doc_id: _read_lines(keys[doc_id]) for doc_id in sorted(keys)}
    return KeDataset(name or root.name, documents, gold)


def normalize_term(phrase):
    """Lemma-normalize a term, repeating until the form is stable."""
    norm = normalize_text(phrase)
    for _ in range(5):
        again = normalize_text(norm)
        if again == norm:
            break
        norm = again
    return norm


def load_thesaurus(file_path, name=None):
    """Load a plain term list as a lemma-normalized :class:`Thesaurus`.

    Lines starting with ``#`` are comments.
    """
    lines = [t for t in _read_lines(file_path) if not t.startswith("#")]
    terms = frozenset(filter(None, (normalize_term(t) for t in lines)))
    if not terms:
        log.warning("thesaurus %s is empty", file_path)
    return Thesaurus(name or Path(file_path).stem, terms)


def clean_title(title):
    """``Python_(programming_language)`` -> ``Python``: underscores become
    spaces and one trailing disambiguation group is removed."""
    title = title.replace("_", " ").strip()
    return _DISAMBIGUATION.sub("", title).strip()


def load_wiki_titles(file_path, dictionary=None, max_tokens=MAX_TITLE_TOKENS):
    """Build an :class:`EntityGazetteer` from a page-title list.

    Unigram titles found in ``dictionary`` are dropped; pass ``None`` to keep
    them (the raw-coverage variant). Titles longer than ``max_tokens`` words
    are skipped since no candidate can match them.
    """
    titles = set()
    removed = set()
    for raw in _read_lines(file_path):
        title = clean_title(raw)
        if not title or (max_tokens and len(title.split()) > max_tokens):
            continue
        norm = normalize_term(title)
        if not norm:
            continue
        if dictionary is not None and " " not in norm and norm in dictionary:
            removed.add(norm)
            continue
        titles.add(norm)
    return EntityGazetteer(frozenset(titles), len(removed))


def load_wordlist(file_path=None):
    """Load a one-word-per-line dictionary; ``None`` loads the bundled list."""
    if file_path is None:
        return DictionarySet(_data.english_words())
    return DictionarySet(frozenset(w.lower() for w in _read_lines(file_path)))
