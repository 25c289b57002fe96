"""Corpus analyses of human-assigned keywords: PoS-tag patterns, n-gram
sizes and Wikipedia coverage."""
import io
import json
from collections import Counter
from dataclasses import dataclass, field

from .corpus import normalize_term
from .text import analyze as analyze_text

NGRAM_BUCKETS = ("n=1", "n=2", "n=3", "n>=4")
NGRAM_COLUMNS = NGRAM_BUCKETS + ("n<=2", "n<=3")


@dataclass(frozen=True)
class DistributionTable:
    """``rows`` are the displayed (key, pct) pairs; ``full`` holds the
    complete distribution the percentages were computed from."""
    rows: tuple
    total_items: int
    full: tuple = ()
    meta: dict = field(default_factory=dict)

    def as_dict(self):
        return dict(self.rows)

    def __len__(self):
        return len(self.rows)


def gold_keywords(ds):
    """Every gold keyword line, document by document, as given in the key files."""
    return [kw for doc_id, _ in ds.documents for kw in ds.gold.get(doc_id, ())]


def _percentages(counts, total):
    # most frequent first, ties alphabetical
    return tuple((k, 100.0 * v / total) for k, v in sorted(counts.items(), key=lambda kv: (-kv[1], kv[0])))


def tag_pattern(keyword):
    """Space-joined tags of ``keyword`` tagged on its own, without document context."""
    doc = analyze_text(keyword)
    return " ".join(t.tag for t in doc.tokens)


def pos_pattern_distribution(ds, top_n=10):
    keywords = gold_keywords(ds)
    if not keywords:
        return DistributionTable((), 0, (), {"casing": "raw"})
    counts = Counter(tag_pattern(kw) for kw in keywords)
    full = _percentages(counts, len(keywords))
    return DistributionTable(full[:top_n], len(keywords), full, {"casing": "raw"})


def ngram_size(keyword):
    return len(keyword.split())


def ngram_distribution(ds):
    """Share of gold keywords with 1, 2, 3 and 4+ whitespace tokens, plus
    the cumulative n<=2 and n<=3 columns."""
    keywords = gold_keywords(ds)
    if not keywords:
        return DistributionTable((), 0, ())
    counts = Counter(min(ngram_size(kw), 4) for kw in keywords)
    total = len(keywords)
    pct = [100.0 * counts.get(n, 0) / total for n in (1, 2, 3, 4)]
    full = tuple(zip(NGRAM_BUCKETS, pct))
    rows = full + (("n<=2", pct[0] + pct[1]), ("n<=3", pct[0] + pct[1] + pct[2]))
    return DistributionTable(rows, total, full)


def wiki_coverage(ds, gazetteer):
    """Percent of gold keywords whose lemma form is a gazetteer title.

    Pass the unfiltered gazetteer (``load_wiki_titles(path, dictionary=None)``)
    to measure raw coverage.
    """
    keywords = gold_keywords(ds)
    if not keywords:
        return 0.0
    hits = sum(normalize_term(kw) in gazetteer.titles for kw in keywords)
    return 100.0 * hits / len(keywords)


def average_tables(tables, top_n=None):
    """Per-key mean of percentages across datasets; a key missing from a
    dataset counts as 0 there. Row order follows the averaged values."""
    tables = [t for t in tables if t.total_items]
    if not tables:
        return DistributionTable((), 0, ())
    keys = []
    for t in tables:
        keys += [k for k, _ in (t.full or t.rows) if k not in keys]
    full_avg = {k: sum(dict(t.full or t.rows).get(k, 0.0) for t in tables) / len(tables) for k in keys}
    row_keys = []
    for t in tables:
        row_keys += [k for k, _ in t.rows if k not in row_keys]
    row_avg = {k: sum(t.as_dict().get(k, 0.0) for t in tables) / len(tables) for k in row_keys}
    total = sum(t.total_items for t in tables)
    full = tuple(sorted(full_avg.items(), key=lambda kv: (-kv[1], kv[0])))
    if top_n is not None:  # ranked table, e.g. PoS patterns
        return DistributionTable(full[:top_n], total, full, dict(tables[0].meta))
    return DistributionTable(tuple((k, row_avg[k]) for k in row_keys), total,
                             tuple((k, full_avg[k]) for k in keys), dict(tables[0].meta))


def _f(x):
    return f"{x:.2f}"


def tables_tsv(named, wide=False):
    """``named`` is a list of (dataset, DistributionTable).

    Long form writes ``dataset  key  pct`` lines; wide form writes one row
    per dataset with a column per key (used for n-gram buckets).
    """
    buf = io.StringIO()
    if wide:
        columns = []
        for _, t in named:
            columns += [k for k, _ in t.rows if k not in columns]
        buf.write("\t".join(("dataset",) + tuple(columns)) + "\n")
        for name, t in named:
            d = t.as_dict()
            buf.write("\t".join([name] + [_f(d.get(c, 0.0)) for c in columns]) + "\n")
    else:
        buf.write("dataset\tkey\tpct\n")
        for name, t in named:
            for k, v in t.rows:
                buf.write(f"{name}\t{k}\t{_f(v)}\n")
    return buf.getvalue()


def tables_json(named):
    payload = [{"dataset": name, "total_items": t.total_items, "meta": t.meta,
                "rows": [[k, v] for k, v in t.rows], "full": [[k, v] for k, v in t.full]}
               for name, t in named]
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"
