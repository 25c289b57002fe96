"""Post-processing applied on top of any extractor's scored candidates.

Three steps, combinable in any subset and always run in the order P, T, W:

    P  drop candidates whose tag sequence fits none of the keyword patterns
    T  multiply the weight of candidates found in a domain thesaurus
    W  multiply the weight of candidates that are Wikipedia titles
"""
import re
from dataclasses import dataclass, field
from pathlib import Path

from .errors import MissingResourceError
from .extract import EXTRACTORS, ExtractorConfig, generate_candidates, rank
from .text import normalize_phrase

STEP_ORDER = "PTW"


@dataclass(frozen=True)
class PatternGrammar:
    noun_tags: frozenset = frozenset({"NN", "NNS", "NNP", "NNPS", "VBG"})
    adj_tags: frozenset = frozenset({"JJ", "JJR", "JJS", "VBN"})
    connector_tags: frozenset = frozenset({"IN", "CC"})
    allow_single_adj: bool = True

    def __post_init__(self):
        for name in ("noun_tags", "adj_tags", "connector_tags"):
            object.__setattr__(self, name, frozenset(getattr(self, name)))
        if not self.noun_tags:
            raise ValueError("noun_tags must not be empty")
        if (self.noun_tags & self.adj_tags or self.noun_tags & self.connector_tags
                or self.adj_tags & self.connector_tags):
            raise ValueError("grammar tag sets must be pairwise disjoint")

    def symbol(self, tag):
        if tag in self.noun_tags:
            return "N"
        if tag in self.adj_tags:
            return "A"
        if tag in self.connector_tags:
            return "C"
        return "x"

    @classmethod
    def from_file(cls, path):
        """Read ``key=value`` lines; tag sets are comma-separated."""
        kwargs = {}
        for line in Path(path).read_text(encoding="utf-8").splitlines():
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            key, sep, value = (s.strip() for s in line.partition("="))
            if not sep:
                raise ValueError(f"{path}: expected key=value, got {line!r}")
            if key == "allow_single_adj":
                kwargs[key] = value.lower() in ("1", "true", "yes", "on")
            elif key in ("noun_tags", "adj_tags", "connector_tags"):
                kwargs[key] = frozenset(t.strip() for t in value.split(",") if t.strip())
            else:
                raise ValueError(f"{path}: unknown grammar key {key!r}")
        return cls(**kwargs)


# health-domain variant: gerunds no longer count as nouns
NO_GERUND_GRAMMAR = PatternGrammar(noun_tags=frozenset({"NN", "NNS", "NNP", "NNPS"}))

_NOUN_PHRASES = re.compile(r"A*N+(C+A*N+)*")


def match_pattern(tags, grammar=PatternGrammar()):
    """True if ``tags`` is a noun phrase, noun phrases joined by connectors,
    or (when allowed) a single adjective. Noun phrase = ADJ* NOUN+."""
    symbols = "".join(grammar.symbol(t) for t in tags)
    if grammar.allow_single_adj and symbols == "A":
        return True
    return bool(_NOUN_PHRASES.fullmatch(symbols))


def pos_filter(candidates, grammar=PatternGrammar()):
    """Keep candidates with at least one occurrence whose tags match."""
    return [c for c in candidates
            if any(match_pattern(tags, grammar) for tags in c.tag_sequences)]


@dataclass(frozen=True)
class BoostConfig:
    thesaurus_factor: float = 2.0
    wiki_factor: float = 2.0

    def __post_init__(self):
        if self.thesaurus_factor < 1.0 or self.wiki_factor < 1.0:
            raise ValueError("boost factors must be >= 1.0")


def lemma_forms(candidate):
    return {normalize_phrase(o.tokens, "lemma") for o in candidate.occurrences}


def _boost(candidates, entries, factor):
    if factor == 1.0 or not entries:
        return list(candidates)
    return [c.with_(weight=c.weight * factor) if not lemma_forms(c).isdisjoint(entries) else c
            for c in candidates]


def thesaurus_boost(candidates, thesaurus, cfg=BoostConfig()):
    """Multiply the weight of candidates whose lemma form is a thesaurus term."""
    return _boost(candidates, thesaurus.terms, cfg.thesaurus_factor)


def wiki_boost(candidates, gazetteer, cfg=BoostConfig()):
    return _boost(candidates, gazetteer.titles, cfg.wiki_factor)


def apply_weights(candidates):
    """Rank by effective score: score * weight when higher is better,
    score / weight when lower is better."""
    return rank(candidates)


def parse_steps(steps):
    """Normalize ``"TP"``, ``{"P", "W"}``, ``"B"`` ... into canonical order."""
    if isinstance(steps, str):
        steps = steps.upper().replace("B", "").replace(",", "").replace("+", "")
    steps = set(steps)
    unknown = steps - set(STEP_ORDER)
    if unknown:
        raise ValueError(f"unknown post-processing step(s): {sorted(unknown)}")
    return "".join(s for s in STEP_ORDER if s in steps)


def combo_name(steps):
    return parse_steps(steps) or "B"


@dataclass(frozen=True)
class Resources:
    thesaurus: object = None
    gazetteer: object = None
    grammar: PatternGrammar = PatternGrammar()
    boost: BoostConfig = BoostConfig()
    extractor: ExtractorConfig = field(default_factory=ExtractorConfig)

    def check(self, steps):
        steps = parse_steps(steps)
        if "T" in steps and self.thesaurus is None:
            raise MissingResourceError("step T needs a thesaurus")
        if "W" in steps and self.gazetteer is None:
            raise MissingResourceError("step W needs a Wikipedia gazetteer")
        return steps


def postprocess(scored, steps, resources):
    """Apply the requested steps, in P, T, W order, to scored candidates."""
    steps = resources.check(steps)
    if "P" in steps:
        scored = pos_filter(scored, resources.grammar)
    if "T" in steps:
        scored = thesaurus_boost(scored, resources.thesaurus, resources.boost)
    if "W" in steps:
        scored = wiki_boost(scored, resources.gazetteer, resources.boost)
    return apply_weights(scored)


def score_document(doc, extractor, cfg):
    """Generate and score candidates; an empty document yields ``[]``."""
    cands = generate_candidates(doc, cfg)
    if not cands:
        return []
    return EXTRACTORS[extractor](doc, cands, cfg)


def run_pipeline(doc, extractor="statistical", steps="", resources=Resources(), k=10):
    """generate -> score -> [P] -> [T] -> [W] -> rank -> top k phrases."""
    steps = resources.check(steps)
    scored = score_document(doc, extractor, resources.extractor)
    return [c.phrase for c in postprocess(scored, steps, resources)[:max(k, 0)]]
