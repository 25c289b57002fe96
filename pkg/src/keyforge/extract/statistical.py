"""Feature-based statistical scorer (lower scores are better).

Per-word features, for a word w with term frequency TF:

    casing      max(#capitalized non-initial, #acronym) / (1 + ln TF)
    position    ln(ln(3 + median sentence index))
    frequency   TF / (mean TF + std TF), over content words
    relatedness 1 + (DL + DR) * TF / max TF
    sentences   (#sentences containing w) / (#sentences)

    S(w) = rel * pos / (case + freq / rel + sent / rel)
    S(p) = prod S(w) / (TF(p) * (1 + sum S(w)))

DL (DR) is the number of distinct words seen to the left (right) of w
within ``cfg.rel_window`` tokens, divided by the total number of such
left (right) co-occurrences.
"""
import math
import statistics
from collections import defaultdict
from dataclasses import dataclass, field

from ..errors import DegenerateDocumentError
from ..text import is_punct
from .candidates import LOWER_IS_BETTER, ExtractorConfig


@dataclass
class WordStats:
    tf: int = 0
    n_upper: int = 0
    n_acronym: int = 0
    sentences: list = field(default_factory=list)
    left: list = field(default_factory=list)
    right: list = field(default_factory=list)


def _is_acronym(surface):
    return len(surface) >= 2 and surface.isupper()


def collect_stats(doc, cfg):
    stats = defaultdict(WordStats)
    for sent in doc.sentences:
        words = [t for t in sent if not is_punct(t.surface)]
        for pos, tok in enumerate(words):
            s = stats[tok.surface.lower()]
            s.tf += 1
            s.sentences.append(tok.token.sentence_index)
            if _is_acronym(tok.surface):
                s.n_acronym += 1
            elif tok.surface[0].isupper() and pos > 0:
                s.n_upper += 1
            for k in range(1, cfg.rel_window + 1):
                if pos - k >= 0:
                    s.left.append(words[pos - k].surface.lower())
                if pos + k < len(words):
                    s.right.append(words[pos + k].surface.lower())
    return stats


def word_features(doc, cfg=None):
    """Map lowercase word -> dict of the five features and the word score."""
    cfg = cfg or ExtractorConfig()
    if not doc.sentences:
        raise DegenerateDocumentError("document has no sentences")
    stats = collect_stats(doc, cfg)
    content_tf = [s.tf for w, s in stats.items() if cfg.is_content(w)]
    if not content_tf:
        content_tf = [s.tf for s in stats.values()] or [1]
    norm = statistics.fmean(content_tf) + statistics.pstdev(content_tf)
    max_tf = max(s.tf for s in stats.values()) if stats else 1
    n_sent = len(doc.sentences)

    out = {}
    for word, s in stats.items():
        case = max(s.n_upper, s.n_acronym) / (1.0 + math.log(s.tf))
        pos = math.log(math.log(3 + statistics.median(s.sentences)))
        freq = s.tf / norm
        dl = len(set(s.left)) / len(s.left) if s.left else 0.0
        dr = len(set(s.right)) / len(s.right) if s.right else 0.0
        rel = 1.0 + (dl + dr) * s.tf / max_tf
        sent = len(set(s.sentences)) / n_sent
        score = (rel * pos) / (case + freq / rel + sent / rel)
        out[word] = {"tf": s.tf, "case": case, "position": pos, "frequency": freq,
                     "relatedness": rel, "sentences": sent, "score": score}
    return out


def score_statistical(doc, candidates, cfg=None):
    """Score candidates; returns new candidates oriented lower-is-better."""
    feats = word_features(doc, cfg)
    scored = []
    for cand in candidates:
        ws = [feats[t.surface.lower()]["score"] for t in cand.tokens]
        tf = len(cand.occurrences)
        score = math.prod(ws) / (tf * (1.0 + sum(ws)))
        scored.append(cand.with_(score=score, orientation=LOWER_IS_BETTER))
    return scored
