"""``keyforge`` command line: extract, bench, analyze, train-context, classify-context.

Settings come from built-in defaults, then an optional ``--config`` file of
``key=value`` lines, then command-line flags (later wins). Resource paths
that do not exist as given are also looked up under ``$KEYFORGE_DATA``.

Exit codes: 0 ok, 1 runtime failure, 2 usage or configuration error.
"""
import argparse
import logging
import os
import sys
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, fields
from pathlib import Path

from . import analyze as an
from . import context as ctx
from . import evaluation as ev
from .corpus import load_dataset, load_thesaurus, load_wiki_titles, load_wordlist
from .errors import (
    EncodingError, InsufficientDataError, KeyforgeError, MissingResourceError, UnknownLabelError,
)
from .extract import ExtractorConfig
from .postprocess import Resources, combo_name, parse_steps, postprocess, score_document
from .text import analyze as analyze_text

EXIT_OK, EXIT_RUNTIME, EXIT_USAGE = 0, 1, 2
DATA_ENV = "KEYFORGE_DATA"
# files picked up from $KEYFORGE_DATA when the matching option is unset
DATA_DEFAULTS = {"wiki_titles": "wiki_titles.txt", "lookup": "lookup.txt",
                 "model": "context_model.json"}

log = logging.getLogger("keyforge")


class UsageError(KeyforgeError):
    """Bad flags, config values or missing resources: exit code 2."""


@dataclass
class RunConfig:
    extractor: str = "statistical"
    steps: str = ""
    k: int = 10
    max_n: int = 3
    window: int = 10
    thesaurus: tuple = ()
    wiki_titles: str = None
    wordlist: str = None
    model: str = None
    lookup: str = None
    seed: int = 0
    context_mode: str = "manual"
    jobs: int = 1
    combos: str = ",".join(ev.ALL_COMBOS)
    top: int = 10
    folds: int = 5
    format: str = "tsv"
    out: str = None
    scores: bool = False

    def validate(self):
        if self.extractor not in ("statistical", "graph"):
            raise UsageError(f"unknown extractor {self.extractor!r}")
        if self.context_mode not in ("manual", "auto"):
            raise UsageError(f"context_mode must be manual or auto, got {self.context_mode!r}")
        for name in ("k", "max_n", "window", "jobs", "folds", "top"):
            if getattr(self, name) < 1:
                raise UsageError(f"{name} must be >= 1")
        if self.format not in ("tsv", "json"):
            raise UsageError(f"format must be tsv or json, got {self.format!r}")
        try:
            self.steps = parse_steps(self.steps)
            self.combos = ",".join(dict.fromkeys(
                combo_name(c) for c in self.combos.split(",") if c.strip()))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        return self


_FIELDS = {f.name: f for f in fields(RunConfig)}
_BOOL = {"1": True, "true": True, "yes": True, "on": True,
         "0": False, "false": False, "no": False, "off": False}


def _coerce(name, value):
    default = _FIELDS[name].default
    if name == "thesaurus":
        return tuple(v.strip() for v in value.split(",") if v.strip())
    if isinstance(default, bool):
        if value.lower() not in _BOOL:
            raise UsageError(f"{name}: expected a boolean, got {value!r}")
        return _BOOL[value.lower()]
    if isinstance(default, int):
        try:
            return int(value)
        except ValueError:
            raise UsageError(f"{name}: expected an integer, got {value!r}") from None
    return value


def read_config(path):
    """Parse a ``key=value`` config file into a dict of RunConfig fields."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read config {path}: {exc.strerror}") from None
    values = {}
    for n, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = (s.strip() for s in line.partition("="))
        key = key.replace("-", "_")
        if not sep or key not in _FIELDS:
            raise UsageError(f"{path}:{n}: unknown or malformed setting {line!r}")
        values[key] = _coerce(key, value)
    return values


def build_config(ns):
    """defaults < config file < flags."""
    values = read_config(ns.config) if getattr(ns, "config", None) else {}
    values.update({k: v for k, v in vars(ns).items() if k in _FIELDS})
    if isinstance(values.get("thesaurus"), list):
        values["thesaurus"] = tuple(values["thesaurus"])
    return RunConfig(**values).validate()


def data_path(path, key=None):
    """Resolve ``path`` (or the ``$KEYFORGE_DATA`` default for ``key``)."""
    data = os.environ.get(DATA_ENV)
    if path is None:
        if data and key in DATA_DEFAULTS and (Path(data) / DATA_DEFAULTS[key]).exists():
            return Path(data) / DATA_DEFAULTS[key]
        return None
    p = Path(path)
    if not p.exists() and not p.is_absolute() and data and (Path(data) / p).exists():
        return Path(data) / p
    return p


def _require(cfg, key, why):
    p = data_path(getattr(cfg, key), key)
    if p is None:
        raise UsageError(f"{why} needs --{key.replace('_', '-')} (or ${DATA_ENV}/{DATA_DEFAULTS.get(key, '')})")
    return p


# --- resources -------------------------------------------------------------

def extractor_config(cfg):
    return ExtractorConfig(max_n=cfg.max_n, window=cfg.window)


def load_gazetteer(cfg, why="step W"):
    path = _require(cfg, "wiki_titles", why)
    return load_wiki_titles(path, load_wordlist(data_path(cfg.wordlist)))


def load_router(cfg):
    model = _require(cfg, "model", "automatic context mode")
    lookup = _require(cfg, "lookup", "automatic context mode")
    clf = ctx.load_model(model)
    table = ctx.ContextLookup.from_file(lookup)
    try:
        return ctx.ContextRouter(clf, table)
    except UnknownLabelError as exc:
        raise UsageError(str(exc)) from None


def thesaurus_source(cfg, dataset_names):
    """ManualContext or AutoContext for benchmark runs."""
    if cfg.context_mode == "auto":
        return ev.AutoContext(load_router(cfg))
    if not cfg.thesaurus:
        raise UsageError("step T needs --thesaurus (or --context-mode auto with --model and --lookup)")
    by_name, default = {}, None
    for entry in cfg.thesaurus:
        name, sep, path = entry.partition("=")
        if sep:
            by_name[name.strip()] = load_thesaurus(data_path(path.strip()), name.strip())
        else:
            default = load_thesaurus(data_path(entry))
    missing = [d for d in dataset_names if d not in by_name] if default is None else []
    if missing:
        raise UsageError(f"no thesaurus for dataset(s): {', '.join(missing)}")
    return ev.ManualContext(by_name, default)


def build_resources(cfg, steps, dataset_names=("",)):
    """Return (Resources, thesaurus source or None) for the union of ``steps``."""
    gazetteer = load_gazetteer(cfg) if "W" in steps else None
    source = thesaurus_source(cfg, dataset_names) if "T" in steps else None
    return Resources(gazetteer=gazetteer, extractor=extractor_config(cfg)), source


# --- extract ---------------------------------------------------------------

_STATE = {}


def _init_extract(cfg, resources, source):
    _STATE.update(cfg=cfg, resources=resources, source=source)


def _extract_one(item):
    name, text = item
    cfg, resources, source = _STATE["cfg"], _STATE["resources"], _STATE["source"]
    if source is not None:
        resources = ev._with_thesaurus(resources, source(name, text))
    doc = analyze_text(text, name)
    scored = score_document(doc, cfg.extractor, resources.extractor)
    return [(c.phrase, c.effective_score) for c in postprocess(scored, cfg.steps, resources)[:cfg.k]]


def _read_inputs(paths):
    if not paths or paths == ["-"]:
        return [("-", sys.stdin.read())]
    out = []
    for p in paths:
        try:
            out.append((p, Path(p).read_bytes().decode("utf-8")))
        except UnicodeDecodeError:
            raise EncodingError(f"{p}: not valid UTF-8") from None
    return out


def _map(fn, init, initargs, items, jobs):
    if jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(min(jobs, len(items)), initializer=init, initargs=initargs) as pool:
            return list(pool.map(fn, items))
    init(*initargs)
    return [fn(it) for it in items]


def cmd_extract(cfg, inputs):
    items = _read_inputs(inputs)
    resources, source = build_resources(cfg, cfg.steps)
    results = _map(_extract_one, _init_extract, (cfg, resources, source), items, cfg.jobs)
    lines = []
    for (name, _), keywords in zip(items, results):
        if len(items) > 1:
            lines.append(f"# {name}")
        for phrase, score in keywords:
            lines.append(f"{phrase}\t{score:.10g}" if cfg.scores else phrase)
    return lines


# --- bench -----------------------------------------------------------------

def cmd_bench(cfg, dirs):
    datasets, failed = [], []
    for d in dirs:
        try:
            datasets.append(load_dataset(data_path(d)))
        except (KeyforgeError, OSError) as exc:
            failed.append(d)
            print(f"keyforge: dataset {d} failed: {exc}", file=sys.stderr)
    if not datasets:
        raise KeyforgeError(f"no dataset could be loaded (failed: {', '.join(failed)})")
    combos = cfg.combos.split(",")
    needed = parse_steps("".join(combos))
    resources, source = build_resources(cfg, needed, [ds.name for ds in datasets])
    report = ev.run_benchmark(datasets, cfg.extractor, resources, combos, cfg.k,
                              thesaurus_source=source, jobs=cfg.jobs)
    prefix = cfg.out or "keyforge_report"
    ev.emit_report(report, f"{prefix}.tsv", "tsv")
    ev.emit_report(report, f"{prefix}.json", "json")
    lines = ev.summary_lines(report)
    if failed:
        raise BenchFailure(lines, failed)
    return lines


class BenchFailure(KeyforgeError):
    def __init__(self, lines, failed):
        self.lines = lines
        super().__init__(f"failed dataset(s): {', '.join(failed)}")


# --- analyze ---------------------------------------------------------------

def cmd_analyze(cfg, kind, dirs):
    datasets = [load_dataset(data_path(d)) for d in dirs]
    if kind == "wiki":
        gazetteer = load_wiki_titles(_require(cfg, "wiki_titles", "analyze wiki"), dictionary=None)
        tables = [(ds.name, an.DistributionTable((("coverage", an.wiki_coverage(ds, gazetteer)),),
                                                 len(an.gold_keywords(ds))))
                  for ds in datasets]
    elif kind == "pos":
        tables = [(ds.name, an.pos_pattern_distribution(ds, cfg.top)) for ds in datasets]
    else:
        tables = [(ds.name, an.ngram_distribution(ds)) for ds in datasets]
    if len(tables) > 1:
        tables.append(("average", an.average_tables([t for _, t in tables],
                                                    cfg.top if kind == "pos" else None)))
    if cfg.format == "json":
        return an.tables_json(tables)
    return an.tables_tsv(tables, wide=(kind == "ngram"))


# --- context ---------------------------------------------------------------

def cmd_train_context(cfg, corpus):
    if cfg.out is None:
        raise UsageError("train-context needs --out MODEL")
    data = ctx.read_corpus(data_path(corpus))
    balanced = ctx.downsample(data, cfg.seed)
    hyper = ctx.TrainConfig(seed=cfg.seed)
    clf = ctx.train_ovr(balanced, ctx.fit_tfidf(t for t, _ in balanced), hyper)
    cv = ctx.cross_validate(balanced, cfg.folds, cfg.seed, hyper)
    ctx.save_model(clf, cfg.out)
    lines = [f"fold {i}\t{acc:.4f}" for i, acc in enumerate(cv.fold_accuracies, 1)]
    lines.append(f"mean\t{cv.mean_accuracy:.4f}")
    return lines


def cmd_classify_context(cfg, inputs):
    clf = ctx.load_model(_require(cfg, "model", "classify-context"))
    items = _read_inputs(inputs)
    lines = []
    for name, text in items:
        pred = ctx.predict_context(clf, text)
        prefix = f"{name}\t" if len(items) > 1 else ""
        lines.append(f"{prefix}{pred.label}\t{pred.confidence:.4f}")
        if pred.low_confidence:
            print(f"keyforge: low confidence for {name}", file=sys.stderr)
    return lines


# --- argument parsing ------------------------------------------------------

def _opt(p, *flags, dest, help, **kw):
    default = _FIELDS[dest].default
    if "default:" in help:
        shown = ""
    else:
        shown = f" (default: {'none' if default in (None, (), '') else default})"
    p.add_argument(*flags, dest=dest, default=argparse.SUPPRESS, help=help + shown, **kw)


def _common(p):
    p.add_argument("--config", metavar="FILE", help="key=value settings file (default: none)")


def _extract_opts(p):
    _opt(p, "--extractor", dest="extractor", choices=("statistical", "graph"), help="candidate scorer")
    _opt(p, "--k", "-k", dest="k", type=int, help="keywords per document")
    _opt(p, "--max-n", dest="max_n", type=int, help="longest candidate in words")
    _opt(p, "--window", dest="window", type=int, help="co-occurrence window of the graph scorer")


def _resource_opts(p):
    _opt(p, "--thesaurus", dest="thesaurus", action="append", metavar="[NAME=]PATH",
         help="domain thesaurus; NAME= assigns it to one dataset")
    _opt(p, "--wiki-titles", dest="wiki_titles", metavar="PATH", help="Wikipedia page-title list")
    _opt(p, "--wordlist", dest="wordlist", metavar="PATH",
         help="dictionary for common-unigram removal (default: bundled list)")
    _opt(p, "--context-mode", dest="context_mode", choices=("manual", "auto"),
         help="thesaurus by hand or by the context classifier")
    _opt(p, "--model", dest="model", metavar="PATH", help="context model for --context-mode auto")
    _opt(p, "--lookup", dest="lookup", metavar="PATH", help="label=thesaurus table for auto mode")
    _opt(p, "--jobs", dest="jobs", type=int, help="worker processes")


def build_parser():
    parser = argparse.ArgumentParser(prog="keyforge", description="Keyword extraction with "
                                     "PoS filtering, thesaurus and Wikipedia boosting.")
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("extract", help="top-k keywords of documents")
    _common(p)
    _extract_opts(p)
    _opt(p, "--steps", dest="steps", help="post-processing steps, any of P, T, W")
    _resource_opts(p)
    _opt(p, "--scores", dest="scores", action="store_true", help="append the effective score")
    p.add_argument("inputs", nargs="*", help="text files; '-' or none reads stdin")

    p = sub.add_parser("bench", help="evaluate step combinations on datasets")
    _common(p)
    _extract_opts(p)
    _opt(p, "--combos", dest="combos", help="comma-separated combinations")
    _resource_opts(p)
    _opt(p, "--out", dest="out", metavar="PREFIX", help="writes PREFIX.tsv and PREFIX.json "
         "(default: keyforge_report)")
    p.add_argument("datasets", nargs="+", help="dataset directories (docsutf8/ + keys/)")

    p = sub.add_parser("analyze", help="gold keyword statistics")
    _common(p)
    p.add_argument("kind", choices=("pos", "ngram", "wiki"))
    p.add_argument("datasets", nargs="+", help="dataset directories")
    _opt(p, "--top", dest="top", type=int, help="rows of the PoS pattern table")
    _opt(p, "--wiki-titles", dest="wiki_titles", metavar="PATH", help="Wikipedia page-title list")
    _opt(p, "--format", dest="format", choices=("tsv", "json"), help="output format")
    _opt(p, "--out", dest="out", metavar="FILE", help="write here instead of stdout")

    p = sub.add_parser("train-context", help="train and cross-validate the context classifier")
    _common(p)
    p.add_argument("corpus", help="label<TAB>title<TAB>abstract file")
    _opt(p, "--seed", dest="seed", type=int, help="sampling and initialization seed")
    _opt(p, "--folds", dest="folds", type=int, help="cross-validation folds")
    _opt(p, "--out", dest="out", metavar="MODEL", help="model file to write (required)")

    p = sub.add_parser("classify-context", help="predict the context of documents")
    _common(p)
    _opt(p, "--model", dest="model", metavar="PATH", help="trained context model")
    p.add_argument("inputs", nargs="*", help="text files; '-' or none reads stdin")
    return parser


def _emit(lines, out=None):
    text = lines if isinstance(lines, str) else "".join(f"{ln}\n" for ln in lines)
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def dispatch(ns):
    cfg = build_config(ns)
    if ns.command == "extract":
        _emit(cmd_extract(cfg, ns.inputs))
    elif ns.command == "bench":
        try:
            _emit(cmd_bench(cfg, ns.datasets))
        except BenchFailure as exc:
            _emit(exc.lines)
            raise
    elif ns.command == "analyze":
        _emit(cmd_analyze(cfg, ns.kind, ns.datasets), cfg.out)
    elif ns.command == "train-context":
        _emit(cmd_train_context(cfg, ns.corpus))
    elif ns.command == "classify-context":
        _emit(cmd_classify_context(cfg, ns.inputs))
    return EXIT_OK


USAGE_ERRORS = (UsageError, MissingResourceError, InsufficientDataError, UnknownLabelError,
                ctx.CorpusFormatError)


def main(argv=None):
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    logging.basicConfig(level=logging.INFO if ns.verbose else logging.WARNING,
                        format="keyforge: %(message)s")
    warnings.simplefilter("default", ctx.ConvergenceWarning)
    try:
        return dispatch(ns)
    except USAGE_ERRORS as exc:
        print(f"keyforge: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (KeyforgeError, OSError, ValueError) as exc:
        print(f"keyforge: error: {exc}", file=sys.stderr)
        return EXIT_RUNTIME


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
