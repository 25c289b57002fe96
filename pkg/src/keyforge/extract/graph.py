"""Co-occurrence graph scorer: weighted PageRank over content words, phrases
scored by the sum of their word scores (higher is better)."""
import numpy as np
from scipy import sparse

from ..errors import DegenerateDocumentError
from .candidates import HIGHER_IS_BETTER, ExtractorConfig

TOL = 1e-6
MAX_ITER = 100


def build_graph(doc, cfg):
    """Return (sorted node keys, symmetric weight matrix).

    Nodes are stems of content words. Two content tokens of one sentence
    whose positions differ by less than ``cfg.window`` add 1 to their edge.
    """
    weights = {}
    nodes = set()
    for sent in doc.sentences:
        content = [(i, t.stem) for i, t in enumerate(sent) if cfg.is_content(t.surface)]
        nodes.update(k for _, k in content)
        for a in range(len(content)):
            i, u = content[a]
            for b in range(a + 1, len(content)):
                j, v = content[b]
                if j - i >= cfg.window:
                    break
                if u != v:
                    edge = (u, v) if u < v else (v, u)
                    weights[edge] = weights.get(edge, 0) + 1
    keys = sorted(nodes)
    index = {k: n for n, k in enumerate(keys)}
    rows, cols, vals = [], [], []
    for (u, v), w in weights.items():
        rows += [index[u], index[v]]
        cols += [index[v], index[u]]
        vals += [w, w]
    mat = sparse.csr_matrix((vals, (rows, cols)), shape=(len(keys), len(keys)), dtype=float)
    return keys, mat


def pagerank(weights, damping=0.85, tol=TOL, max_iter=MAX_ITER):
    """Weighted PageRank on a symmetric (sparse or dense) weight matrix.

    Mass from nodes without edges is spread uniformly, so scores always sum
    to one.
    """
    weights = sparse.csr_matrix(weights, dtype=float)
    n = weights.shape[0]
    if n == 0:
        raise DegenerateDocumentError("empty graph")
    out_strength = np.asarray(weights.sum(axis=1)).ravel()
    dangling = out_strength == 0
    inv = np.divide(1.0, out_strength, out=np.zeros(n), where=~dangling)
    transition = sparse.diags(inv) @ weights  # row-stochastic where defined
    scores = np.full(n, 1.0 / n)
    for _ in range(max_iter):
        spread = transition.T @ scores + scores[dangling].sum() / n
        new = (1.0 - damping) / n + damping * spread
        delta = np.abs(new - scores).max()
        scores = new
        if delta < tol:
            break
    return scores / scores.sum()


def word_scores(doc, cfg=None):
    cfg = cfg or ExtractorConfig()
    keys, mat = build_graph(doc, cfg)
    return dict(zip(keys, pagerank(mat, cfg.damping)))


def score_graph(doc, candidates, cfg=None):
    """Score candidates; returns new candidates oriented higher-is-better."""
    scores = word_scores(doc, cfg)
    return [c.with_(score=float(sum(scores[t.stem] for t in c.tokens)),
                    orientation=HIGHER_IS_BETTER)
            for c in candidates]
