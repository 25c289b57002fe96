"""Micro-averaged P/R/F1@k with stemmed exact matching, and the benchmark
runner that evaluates every combination of post-processing steps."""
import csv
import io
import itertools
import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field, replace

from .errors import MissingResourceError, ZeroBaselineError
from .postprocess import Resources, combo_name, parse_steps, postprocess, score_document
from .text import analyze, is_punct, stem, tokenize

ALL_COMBOS = tuple(combo_name("".join(c)) for n in range(4)
                   for c in itertools.combinations("PTW", n))
REPORT_NOTE = ("recall counts every deduplicated gold keyword, including keywords "
               "absent from the document text")


def stem_phrase(phrase):
    return " ".join(stem(t.surface) for t in tokenize(phrase.lower()) if not is_punct(t.surface))


def stem_set(phrases):
    return {s for s in map(stem_phrase, phrases) if s}


def match_count(predicted, gold):
    """Number of distinct stemmed predictions that equal a stemmed gold keyword."""
    return len(stem_set(predicted) & stem_set(gold))


@dataclass(frozen=True)
class EvalResult:
    precision: float
    recall: float
    f1: float
    tp: int
    n_pred: int
    n_gold: int


def prf(tp, n_pred, n_gold):
    p = tp / n_pred if n_pred else 0.0
    r = tp / n_gold if n_gold else 0.0
    f = 2 * p * r / (p + r) if p + r > 0 else 0.0
    return EvalResult(p, r, f, tp, n_pred, n_gold)


def micro_prf_at_k(predictions, gold, k=10):
    """Pool true positives and counts over documents, then compute P/R/F1.

    ``predictions`` and ``gold`` are parallel sequences of phrase lists.
    Prediction lists are cut to ``k``; both sides are stemmed and deduplicated.
    """
    tp = n_pred = n_gold = 0
    for pred, ref in zip(predictions, gold, strict=True):
        p, g = stem_set(list(pred)[:k]), stem_set(ref)
        tp += len(p & g)
        n_pred += len(p)
        n_gold += len(g)
    return prf(tp, n_pred, n_gold)


def improvement_pct(base, enhanced, metric="f1"):
    """Relative change of ``metric`` in percent."""
    b, e = getattr(base, metric), getattr(enhanced, metric)
    if b == 0:
        raise ZeroBaselineError(f"baseline {metric} is zero")
    return 100.0 * (e - b) / b


@dataclass
class BenchmarkReport:
    extractor: str
    k: int
    combos: tuple
    datasets: tuple
    grid: dict = field(default_factory=dict)  # (dataset, combo) -> EvalResult
    notes: tuple = (REPORT_NOTE,)

    def delta_f1(self, dataset, combo):
        try:
            return improvement_pct(self.grid[(dataset, "B")], self.grid[(dataset, combo)])
        except ZeroBaselineError:
            return math.nan

    @property
    def improvements(self):
        """combo -> (mean F1 change in %, % of datasets with strictly higher F1).

        Datasets whose baseline F1 is zero are left out of the mean change but
        still counted for the improved-cases share.
        """
        out = {}
        for combo in self.combos:
            if combo == "B":
                continue
            deltas = [self.delta_f1(d, combo) for d in self.datasets]
            finite = [x for x in deltas if not math.isnan(x)]
            better = sum(self.grid[(d, combo)].f1 > self.grid[(d, "B")].f1 for d in self.datasets)
            out[combo] = (sum(finite) / len(finite) if finite else math.nan,
                          100.0 * better / len(self.datasets) if self.datasets else 0.0)
        return out

    def rows(self):
        for d in self.datasets:
            for c in self.combos:
                yield d, c, self.grid[(d, c)]

    def to_json(self):
        return {
            "extractor": self.extractor, "k": self.k,
            "combos": list(self.combos), "datasets": list(self.datasets),
            "grid": [{"dataset": d, "combo": c, **asdict(r)} for d, c, r in self.rows()],
            "improvements": {c: {"delta_f1_pct": _num(v[0]), "improved_pct": v[1]}
                             for c, v in self.improvements.items()},
            "notes": list(self.notes),
        }

    @classmethod
    def from_json(cls, payload):
        grid = {}
        for row in payload["grid"]:
            row = dict(row)
            key = (row.pop("dataset"), row.pop("combo"))
            grid[key] = EvalResult(**row)
        return cls(payload["extractor"], payload["k"], tuple(payload["combos"]),
                   tuple(payload["datasets"]), grid, tuple(payload["notes"]))


def _num(x):
    return None if math.isnan(x) else x


# per-process state for worker pools
_WORKER = {}


def _init_worker(extractor, resources, combos, k, thesaurus_source):
    _WORKER.update(extractor=extractor, resources=resources, combos=combos, k=k,
                   thesaurus_source=thesaurus_source)


def _doc_predictions(item):
    """Top-k phrases of one document under every combo."""
    dataset, doc_id, text = item
    w = _WORKER
    resources = w["resources"]
    if w["thesaurus_source"] is not None and any("T" in c for c in w["combos"]):
        resources = _with_thesaurus(resources, w["thesaurus_source"](dataset, text))
    doc = analyze(text, doc_id)
    scored = score_document(doc, w["extractor"], resources.extractor)
    return {c: [x.phrase for x in postprocess(scored, c, resources)[:w["k"]]]
            for c in w["combos"]}


def _with_thesaurus(resources, thesaurus):
    return replace(resources, thesaurus=thesaurus)


class ManualContext:
    """Thesaurus chosen per dataset by hand: ``{dataset_name: Thesaurus}``."""

    def __init__(self, by_dataset, default=None):
        self.by_dataset = dict(by_dataset)
        self.default = default

    def __call__(self, dataset, text):
        thesaurus = self.by_dataset.get(dataset, self.default)
        if thesaurus is None:
            raise MissingResourceError(f"no thesaurus assigned to dataset {dataset!r}")
        return thesaurus


class AutoContext:
    """Thesaurus chosen per document by a :class:`~keyforge.context.ContextRouter`."""

    def __init__(self, router):
        self.router = router

    def __call__(self, dataset, text):
        return self.router.thesaurus_for(text)


def run_benchmark(datasets, extractor="statistical", resources=Resources(), combos=ALL_COMBOS,
                  k=10, thesaurus_source=None, jobs=1):
    """Evaluate ``combos`` on every dataset.

    ``thesaurus_source(dataset_name, text)`` may supply a per-document
    thesaurus (manual per-dataset choice or automatic context routing); when
    absent ``resources.thesaurus`` is used throughout.
    """
    combos = tuple(dict.fromkeys(["B"] + [combo_name(c) for c in combos]))
    for c in combos:
        if thesaurus_source is None or "T" not in c:
            resources.check(c)
        elif "W" in c:
            resources.check("W")
    items = [(ds.name, doc_id, text) for ds in datasets for doc_id, text in ds.documents]
    init = (extractor, resources, combos, k, thesaurus_source)
    if jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(jobs, initializer=_init_worker, initargs=init) as pool:
            outputs = list(pool.map(_doc_predictions, items, chunksize=8))
    else:
        _init_worker(*init)
        outputs = [_doc_predictions(it) for it in items]

    report = BenchmarkReport(extractor, k, combos, tuple(ds.name for ds in datasets))
    pos = 0
    for ds in datasets:
        chunk = outputs[pos:pos + len(ds.documents)]
        pos += len(ds.documents)
        gold = [ds.gold[doc_id] for doc_id, _ in ds.documents]
        for c in combos:
            report.grid[(ds.name, c)] = micro_prf_at_k([o[c] for o in chunk], gold, k)
    return report


TSV_COLUMNS = ("dataset", "combo", "precision", "recall", "f1", "delta_f1_pct")


def _fmt(x):
    return "nan" if math.isnan(x) else f"{x:.6f}"


def report_tsv(report):
    buf = io.StringIO()
    writer = csv.writer(buf, delimiter="\t", lineterminator="\n")
    for note in report.notes:
        buf.write(f"# {note}\n")
    writer.writerow(TSV_COLUMNS)
    for d, c, r in report.rows():
        delta = 0.0 if c == "B" else report.delta_f1(d, c)
        writer.writerow([d, c, _fmt(r.precision), _fmt(r.recall), _fmt(r.f1), _fmt(delta)])
    return buf.getvalue()


def report_json(report):
    return json.dumps(report.to_json(), indent=2, sort_keys=True, allow_nan=False) + "\n"


def emit_report(report, path, fmt="tsv"):
    """Write the report as ``tsv`` or ``json``; output is byte-deterministic."""
    text = report_tsv(report) if fmt == "tsv" else report_json(report)
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)
    return path


def read_report(path):
    with open(path, encoding="utf-8") as fh:
        return BenchmarkReport.from_json(json.load(fh))


def summary_lines(report):
    """Plain-text summary: mean F1 change and share of improved datasets per combo."""
    lines = [f"{'combo':<6}{'dF1%':>10}{'improved%':>12}"]
    for combo, (delta, share) in report.improvements.items():
        lines.append(f"{combo:<6}{delta:>10.2f}{share:>12.1f}")
    return lines


__all__ = [
    "ALL_COMBOS", "AutoContext", "BenchmarkReport", "ManualContext", "EvalResult", "emit_report", "improvement_pct",
    "match_count", "micro_prf_at_k", "parse_steps", "prf", "read_report", "report_json",
    "report_tsv", "run_benchmark", "stem_phrase", "summary_lines",
]
