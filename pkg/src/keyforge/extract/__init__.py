"""Candidate generation and the two unsupervised scorers."""
from .candidates import (
    HIGHER_IS_BETTER, LOWER_IS_BETTER, CandidateKeyword, ExtractorConfig, Occurrence,
    generate_candidates,
)
from .graph import pagerank, score_graph
from .ranking import rank, top_k
from .statistical import score_statistical, word_features

EXTRACTORS = {"statistical": score_statistical, "graph": score_graph}


def extract(doc, extractor="statistical", cfg=None, k=10):
    """Bare extractor output: the top-k phrases of ``doc``."""
    cfg = cfg or ExtractorConfig()
    cands = generate_candidates(doc, cfg)
    if not cands:
        return []
    return top_k(EXTRACTORS[extractor](doc, cands, cfg), k)


__all__ = [
    "CandidateKeyword", "EXTRACTORS", "ExtractorConfig", "HIGHER_IS_BETTER",
    "LOWER_IS_BETTER", "Occurrence", "extract", "generate_candidates", "pagerank",
    "rank", "score_graph", "score_statistical", "top_k", "word_features",
]
