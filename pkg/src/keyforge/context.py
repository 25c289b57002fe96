"""Automatic context identification and context-to-thesaurus routing.

A document (title + abstract) is mapped to TF-IDF features and classified
by one binary logistic model per context (one-vs-rest). The predicted label
selects a thesaurus through a ``label=path`` lookup table.
"""
import json
import logging
import math
import random
import re
import warnings
from collections import Counter, defaultdict
from dataclasses import dataclass
from pathlib import Path
from typing import NamedTuple

import numpy as np
from scipy import sparse

from .corpus import load_thesaurus
from .errors import (
    EmptyCorpusError, InsufficientDataError, KeyforgeError, UnknownLabelError,
)

log = logging.getLogger(__name__)

MODEL_FORMAT = "keyforge-context-model"
_WORD = re.compile(r"\b\w\w+\b")


class CorpusFormatError(KeyforgeError, ValueError):
    def __init__(self, path, line_numbers):
        self.line_numbers = list(line_numbers)
        shown = ", ".join(map(str, self.line_numbers[:10]))
        more = " ..." if len(self.line_numbers) > 10 else ""
        super().__init__(f"{path}: malformed line(s) {shown}{more}; "
                         "expected label<TAB>title<TAB>abstract")


def words(text):
    return _WORD.findall(text.lower())


@dataclass(frozen=True)
class TfidfVocabulary:
    terms: tuple
    idf: np.ndarray
    doc_count: int

    @property
    def index(self):
        idx = self.__dict__.get("_index")
        if idx is None:
            idx = {t: i for i, t in enumerate(self.terms)}
            object.__setattr__(self, "_index", idx)
        return idx

    def __len__(self):
        return len(self.terms)

    def transform(self, texts):
        """L2-normalized tf*idf rows; a text with no known terms is all zeros."""
        index = self.index
        rows, cols, vals = [], [], []
        for r, text in enumerate(texts):
            counts = Counter(index[w] for w in words(text) if w in index)
            for c, n in sorted(counts.items()):
                rows.append(r)
                cols.append(c)
                vals.append(n * self.idf[c])
        mat = sparse.csr_matrix((vals, (rows, cols)), shape=(len(texts), len(self.terms)))
        norms = np.sqrt(np.asarray(mat.multiply(mat).sum(axis=1)).ravel())
        norms[norms == 0] = 1.0
        return sparse.csr_matrix(sparse.diags(1.0 / norms) @ mat)


def fit_tfidf(texts):
    """Fit a lowercase-unigram vocabulary with idf = ln((1+N)/(1+df)) + 1."""
    texts = list(texts)
    df = Counter()
    for text in texts:
        df.update(set(words(text)))
    if not df:
        raise EmptyCorpusError("no terms found in the training texts")
    terms = tuple(sorted(df))
    n = len(texts)
    idf = np.array([math.log((1 + n) / (1 + df[t])) + 1.0 for t in terms])
    return TfidfVocabulary(terms, idf, n)


def downsample(labeled, seed=0):
    """Reduce every class to the size of the smallest one by seeded sampling.

    ``labeled`` is a sequence of ``(text, label)``; input order is kept.
    """
    labeled = list(labeled)
    by_label = defaultdict(list)
    for i, (_, label) in enumerate(labeled):
        by_label[label].append(i)
    if len(by_label) < 2:
        raise InsufficientDataError("downsampling needs at least two classes")
    size = min(len(ix) for ix in by_label.values())
    rng = random.Random(seed)
    keep = []
    for label in sorted(by_label):
        keep.extend(rng.sample(by_label[label], size))
    return [labeled[i] for i in sorted(keep)]


@dataclass(frozen=True)
class TrainConfig:
    l2: float = 1e-4
    tol: float = 1e-5
    max_epochs: int = 500
    seed: int = 0


class ConvergenceWarning(UserWarning):
    pass


def _fit_binary(X, y, cfg, rng):
    """Logistic regression with L2 penalty (bias unpenalized) by accelerated
    full-batch gradient descent with gradient-based momentum restart.

    Returns (weights, bias, final gradient norm, epochs used).
    """
    n, d = X.shape
    sign = np.where(y, 1.0, -1.0)
    # Lipschitz bound: rows have unit norm, plus the bias column
    step = 1.0 / (0.25 * 2.0 + cfg.l2)
    theta = np.concatenate([rng.normal(0.0, 1e-3, d), [0.0]])
    look = theta.copy()
    t = 1.0
    gnorm = math.inf

    def grad(p):
        z = X @ p[:-1] + p[-1]
        g_z = -sign * _sigmoid(-sign * z) / n
        g = np.empty_like(p)
        g[:-1] = X.T @ g_z + cfg.l2 * p[:-1]
        g[-1] = g_z.sum()
        return g

    for epoch in range(1, cfg.max_epochs + 1):
        g = grad(look)
        new = look - step * g
        if np.dot(g, new - theta) > 0:  # restart momentum
            t = 1.0
        t_next = (1.0 + math.sqrt(1.0 + 4.0 * t * t)) / 2.0
        look = new + ((t - 1.0) / t_next) * (new - theta)
        theta, t = new, t_next
        gnorm = float(np.linalg.norm(grad(theta)))
        if gnorm < cfg.tol:
            return theta[:-1], theta[-1], gnorm, epoch
    return theta[:-1], theta[-1], gnorm, cfg.max_epochs


def _sigmoid(z):
    out = np.empty_like(z, dtype=float)
    pos = z >= 0
    out[pos] = 1.0 / (1.0 + np.exp(-z[pos]))
    ez = np.exp(z[~pos])
    out[~pos] = ez / (1.0 + ez)
    return out


class Prediction(NamedTuple):
    label: str
    confidence: float

    @property
    def low_confidence(self):
        """The winning one-vs-rest model does not itself vote positive."""
        return self.confidence < 0.5


@dataclass(frozen=True)
class ContextClassifier:
    vocab: TfidfVocabulary
    classes: tuple
    weights: np.ndarray  # (n_classes, n_terms)
    bias: np.ndarray  # (n_classes,)

    def decision_function(self, texts):
        X = self.vocab.transform(list(texts))
        return np.asarray(X @ self.weights.T) + self.bias

    def predict_proba(self, texts):
        """Per-class sigmoid scores (each in (0, 1); rows need not sum to 1)."""
        return _sigmoid(self.decision_function(texts))

    def predict(self, texts):
        probs = self.predict_proba(texts)
        # argmax returns the first maximum, so ties go to class order
        return [Prediction(self.classes[i], float(row[i]))
                for row, i in zip(probs, probs.argmax(axis=1))]


def train_ovr(balanced, vocab, hyper=TrainConfig()):
    """Train one binary logistic model per class on ``(text, label)`` pairs."""
    texts = [t for t, _ in balanced]
    labels = np.array([lab for _, lab in balanced])
    classes = tuple(sorted(set(labels.tolist())))
    if len(classes) < 2:
        raise InsufficientDataError("training needs at least two classes")
    X = vocab.transform(texts)
    rng = np.random.default_rng(hyper.seed)
    W = np.zeros((len(classes), len(vocab)))
    b = np.zeros(len(classes))
    for c, label in enumerate(classes):
        W[c], b[c], gnorm, epochs = _fit_binary(X, labels == label, hyper, rng)
        if gnorm >= hyper.tol:
            warnings.warn(f"model for {label!r} stopped after {epochs} epochs "
                          f"with gradient norm {gnorm:.2e}", ConvergenceWarning, stacklevel=2)
        log.debug("class %s: %d epochs, |grad| %.2e", label, epochs, gnorm)
    return ContextClassifier(vocab, classes, W, b)


def predict_context(clf, text):
    """Most likely context of one text as ``(label, confidence)``."""
    return clf.predict([text])[0]


@dataclass(frozen=True)
class CVResult:
    fold_accuracies: tuple
    class_accuracies: dict  # label -> mean binary accuracy of its model
    fold_sizes: tuple

    @property
    def mean_accuracy(self):
        return float(np.mean(self.fold_accuracies))


def stratified_folds(labels, folds=5, seed=0):
    """Fold index per sample; each class is shuffled then dealt round-robin."""
    by_label = defaultdict(list)
    for i, lab in enumerate(labels):
        by_label[lab].append(i)
    too_small = sorted(lab for lab, ix in by_label.items() if len(ix) < folds)
    if too_small or len(by_label) < 2:
        raise InsufficientDataError(
            f"need >= 2 classes with >= {folds} samples each; short: {too_small}")
    rng = random.Random(seed)
    assignment = [0] * len(labels)
    offset = 0
    for lab in sorted(by_label):
        ix = by_label[lab][:]
        rng.shuffle(ix)
        for n, i in enumerate(ix):
            assignment[i] = (n + offset) % folds
        # rotate the starting fold so remainders spread over folds
        offset = (offset + len(ix)) % folds
    return assignment


def cross_validate(data, folds=5, seed=0, hyper=None):
    """Stratified k-fold accuracy of the full fit_tfidf + train_ovr procedure."""
    data = list(data)
    labels = [lab for _, lab in data]
    assignment = stratified_folds(labels, folds, seed)
    hyper = hyper or TrainConfig(seed=seed)
    accs, sizes = [], []
    class_hits = defaultdict(list)
    for f in range(folds):
        train = [d for d, a in zip(data, assignment) if a != f]
        test = [d for d, a in zip(data, assignment) if a == f]
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", ConvergenceWarning)
            clf = train_ovr(train, fit_tfidf(t for t, _ in train), hyper)
        texts = [t for t, _ in test]
        truth = np.array([lab for _, lab in test])
        probs = clf.predict_proba(texts)
        pred = np.array(clf.classes)[probs.argmax(axis=1)]
        accs.append(float(np.mean(pred == truth)))
        sizes.append(len(test))
        for c, label in enumerate(clf.classes):
            class_hits[label].append(float(np.mean((probs[:, c] >= 0.5) == (truth == label))))
    return CVResult(tuple(accs), {k: float(np.mean(v)) for k, v in sorted(class_hits.items())},
                    tuple(sizes))


def read_corpus(path):
    """Read ``label<TAB>title<TAB>abstract`` lines as ``(title + abstract, label)``."""
    out, bad = [], []
    with open(path, encoding="utf-8") as fh:
        for n, line in enumerate(fh, 1):
            line = line.rstrip("\n").rstrip("\r")
            if not line.strip():
                continue
            parts = line.split("\t")
            if len(parts) != 3 or not parts[0].strip():
                bad.append(n)
                continue
            label, title, abstract = (p.strip() for p in parts)
            out.append((f"{title} {abstract}".strip(), label))
    if bad:
        raise CorpusFormatError(path, bad)
    return out


def save_model(clf, path):
    """Write the classifier as JSON; identical models give identical bytes."""
    payload = {
        "format": MODEL_FORMAT,
        "version": 1,
        "classes": list(clf.classes),
        "doc_count": clf.vocab.doc_count,
        "terms": list(clf.vocab.terms),
        "idf": clf.vocab.idf.tolist(),
        "bias": clf.bias.tolist(),
        "weights": clf.weights.tolist(),
    }
    Path(path).write_text(json.dumps(payload, separators=(",", ":")) + "\n", encoding="utf-8")


def load_model(path):
    payload = json.loads(Path(path).read_text(encoding="utf-8"))
    if payload.get("format") != MODEL_FORMAT:
        raise ValueError(f"{path}: not a {MODEL_FORMAT} file")
    vocab = TfidfVocabulary(tuple(payload["terms"]), np.array(payload["idf"], dtype=float),
                            payload["doc_count"])
    return ContextClassifier(vocab, tuple(payload["classes"]),
                             np.array(payload["weights"], dtype=float).reshape(
                                 len(payload["classes"]), len(vocab)),
                             np.array(payload["bias"], dtype=float))


class ContextLookup(dict):
    """label -> thesaurus path."""

    @classmethod
    def from_file(cls, path):
        base = Path(path).parent
        table = cls()
        for n, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            label, sep, target = (s.strip() for s in line.partition("="))
            if not sep or not label or not target:
                raise ValueError(f"{path}:{n}: expected label=path")
            target = Path(target)
            table[label] = target if target.is_absolute() else base / target
        return table

    def check(self, clf):
        missing = [c for c in clf.classes if c not in self]
        if missing:
            raise UnknownLabelError(f"lookup table has no thesaurus for {missing}")


def route_thesaurus(label, lookup, cache=None):
    """Thesaurus for ``label``, loaded once and then served from ``cache``."""
    if label not in lookup:
        raise UnknownLabelError(f"no thesaurus registered for context {label!r}")
    if cache is None:
        return load_thesaurus(lookup[label], name=label)
    if label not in cache:
        cache[label] = load_thesaurus(lookup[label], name=label)
    return cache[label]


class ContextRouter:
    """Classify a document, then fetch the thesaurus for its context."""

    def __init__(self, classifier, lookup):
        lookup.check(classifier)
        self.classifier = classifier
        self.lookup = lookup
        self.cache = {}

    def thesaurus_for(self, text):
        label, _ = predict_context(self.classifier, text)
        return route_thesaurus(label, self.lookup, self.cache)
