from dataclasses import dataclass, field, replace

from .. import _data
from ..text import is_numeric, is_punct

LOWER_IS_BETTER = "lower_is_better"
HIGHER_IS_BETTER = "higher_is_better"
ORIENTATIONS = (LOWER_IS_BETTER, HIGHER_IS_BETTER)


@dataclass(frozen=True)
class ExtractorConfig:
    max_n: int = 3
    window: int = 10
    damping: float = 0.85
    stopwords: frozenset = field(default_factory=_data.stopwords)
    # co-occurrence window for the statistical relatedness feature
    rel_window: int = 1

    def __post_init__(self):
        if self.max_n < 1:
            raise ValueError("max_n must be >= 1")
        if self.window < 2:
            raise ValueError("window must be >= 2")
        if not 0 < self.damping < 1:
            raise ValueError("damping must lie in (0, 1)")
        if self.rel_window < 1:
            raise ValueError("rel_window must be >= 1")
        stop = self.stopwords
        if hasattr(stop, "words"):
            stop = stop.words
        object.__setattr__(self, "stopwords", frozenset(w.lower() for w in stop))

    def is_content(self, surface):
        return not (is_punct(surface) or is_numeric(surface)
                    or surface.lower() in self.stopwords)


@dataclass(frozen=True)
class Occurrence:
    sentence_index: int
    start: int  # token index within the sentence
    tokens: tuple

    @property
    def tags(self):
        return tuple(t.tag for t in self.tokens)


@dataclass(frozen=True)
class CandidateKeyword:
    """A candidate phrase with its extractor score and post-processing weight.

    Candidates are keyed by their stemmed form; ``occurrences`` keeps every
    place the phrase appears, in document order.
    """
    key: str
    occurrences: tuple
    score: float = 0.0
    weight: float = 1.0
    orientation: str = HIGHER_IS_BETTER

    @property
    def tokens(self):
        return self.occurrences[0].tokens

    @property
    def phrase(self):
        return " ".join(t.surface for t in self.tokens)

    @property
    def first_position(self):
        occ = self.occurrences[0]
        return occ.sentence_index, occ.start

    @property
    def tag_sequences(self):
        return tuple(dict.fromkeys(o.tags for o in self.occurrences))

    @property
    def effective_score(self):
        if self.orientation == HIGHER_IS_BETTER:
            return self.score * self.weight
        return self.score / self.weight

    def with_(self, **changes):
        return replace(self, **changes)


def generate_candidates(doc, cfg=None):
    """All within-sentence n-grams (1 <= n <= max_n) made only of content words.

    A content word is neither a stopword, punctuation, nor purely numeric.
    Repeated phrases collapse onto one candidate keyed by the stemmed phrase.
    """
    cfg = cfg or ExtractorConfig()
    found = {}
    for sent in doc.sentences:
        ok = [cfg.is_content(t.surface) for t in sent]
        for i in range(len(sent)):
            for n in range(1, cfg.max_n + 1):
                j = i + n
                if j > len(sent) or not ok[j - 1]:
                    break
                toks = tuple(sent[i:j])
                key = " ".join(t.stem for t in toks)
                occ = Occurrence(toks[0].token.sentence_index, i, toks)
                found.setdefault(key, []).append(occ)
    cands = [CandidateKeyword(key, tuple(occs)) for key, occs in found.items()]
    cands.sort(key=lambda c: c.first_position)
    return cands
