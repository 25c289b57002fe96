"""Acceptance gate. Each test carries a ``criterion`` marker; the terminal
summary prints one pass/fail line per criterion.

Criteria 1-4 need the public datasets and resources under ``$KEYFORGE_DATA``:

    $KEYFORGE_DATA/datasets/<Name>/{docsutf8,keys}/
    $KEYFORGE_DATA/wiki_titles.txt
    $KEYFORGE_DATA/thesauri/<context>.txt      (agr, cs, health, econ)

and skip with a reason when they are absent.
"""
import json
import random
import statistics
from collections import Counter

import pytest

from keyforge.analyze import average_tables, ngram_distribution, pos_pattern_distribution, wiki_coverage
from keyforge.cli import main
from keyforge.context import (
    TrainConfig, cross_validate, downsample, fit_tfidf, read_corpus, save_model, train_ovr,
)
from keyforge.corpus import Thesaurus, load_dataset, load_thesaurus, load_wiki_titles, load_wordlist
from keyforge.evaluation import ManualContext, micro_prf_at_k, run_benchmark
from keyforge.extract import HIGHER_IS_BETTER, LOWER_IS_BETTER, CandidateKeyword, Occurrence
from keyforge.postprocess import BoostConfig, Resources, apply_weights, match_pattern, thesaurus_boost
from keyforge.text import TaggedToken, Token, stem

from .conftest import FIXTURES

PUBLISHED = json.loads((FIXTURES / "published_tables.json").read_text())
criterion = pytest.mark.criterion


def _datasets(external_data, names):
    if external_data is None:
        pytest.skip("KEYFORGE_DATA is not set; public datasets unavailable offline")
    found = {n: external_data / "datasets" / n for n in names
             if (external_data / "datasets" / n / "docsutf8").is_dir()}
    if not found:
        pytest.skip(f"none of {sorted(names)} under {external_data / 'datasets'}")
    return {n: load_dataset(p, name=n) for n, p in sorted(found.items())}


# --- 1. n-gram tables --------------------------------------------------------

@criterion("C1")
def test_ngram_tables_match_published_rows(external_data):
    found = _datasets(external_data, PUBLISHED["ngram"])
    cols = PUBLISHED["ngram_columns"]
    for name, ds in found.items():
        got = ngram_distribution(ds).as_dict()
        for col, want in zip(cols, PUBLISHED["ngram"][name]):
            assert abs(got[col] - want) <= 0.5, (name, col, got[col], want)


# --- 2. Wikipedia coverage ---------------------------------------------------

@pytest.fixture(scope="module")
def raw_gazetteer(external_data):
    if external_data is None or not (external_data / "wiki_titles.txt").exists():
        pytest.skip("no $KEYFORGE_DATA/wiki_titles.txt (full page-title dump)")
    return load_wiki_titles(external_data / "wiki_titles.txt", dictionary=None)


@criterion("C2")
def test_wiki_coverage_per_dataset(external_data, raw_gazetteer):
    found = _datasets(external_data, {"wiki20", "Inspec"})
    for name, ds in found.items():
        assert abs(wiki_coverage(ds, raw_gazetteer) - PUBLISHED["wiki"][name]) <= 5.0, name


@criterion("C2")
def test_wiki_coverage_average(external_data, raw_gazetteer):
    found = _datasets(external_data, PUBLISHED["wiki"])
    got = statistics.mean(wiki_coverage(ds, raw_gazetteer) for ds in found.values())
    # over the fetched subset, against the published mean of that same subset
    want = statistics.mean(PUBLISHED["wiki"][n] for n in found)
    if len(found) == len(PUBLISHED["wiki"]):
        assert want == pytest.approx(PUBLISHED["wiki_average"], abs=0.01)
    assert abs(got - want) <= 5.0


# --- 3. PoS patterns ---------------------------------------------------------

@criterion("C3")
def test_pos_pattern_average(external_data):
    found = _datasets(external_data, PUBLISHED["pos"])
    avg = average_tables([pos_pattern_distribution(ds) for ds in found.values()], top_n=10)
    top3 = [k for k, _ in avg.rows[:3]]
    assert top3 == PUBLISHED["pos_patterns"][:3]
    want_nn = statistics.mean(PUBLISHED["pos"][n][0] for n in found)
    assert abs(avg.as_dict()["NN"] - want_nn) <= 5.0


# --- 4. directional improvement ----------------------------------------------

def _improvement_checks(report):
    ptw_better = [report.grid[(d, "PTW")].f1 > report.grid[(d, "B")].f1 for d in report.datasets]
    t_better = [report.grid[(d, "T")].f1 > report.grid[(d, "B")].f1 for d in report.datasets]
    return ptw_better, t_better


@pytest.fixture(scope="module")
def real_bench(external_data, raw_gazetteer):
    matched = {n for n, ctx in PUBLISHED["context"].items()
               if ctx and external_data and (external_data / "thesauri" / f"{ctx}.txt").exists()}
    found = _datasets(external_data, matched)
    if len(found) < 3:
        pytest.skip(f"need >= 3 context-matched datasets, found {sorted(found)}")
    manual = ManualContext({n: load_thesaurus(external_data / "thesauri" /
                                              f"{PUBLISHED['context'][n]}.txt") for n in found})
    res = Resources(gazetteer=load_wiki_titles(external_data / "wiki_titles.txt", load_wordlist()))
    return run_benchmark(list(found.values()), "statistical", res, ("B", "T", "PTW"),
                         thesaurus_source=manual, jobs=4)


@criterion("C4")
def test_ptw_improves_two_thirds(real_bench):
    ptw, _ = _improvement_checks(real_bench)
    assert sum(ptw) * 3 >= 2 * len(ptw)


@criterion("C4")
def test_thesaurus_improves_every_matched_dataset(real_bench):
    _, t = _improvement_checks(real_bench)
    assert all(t), dict(zip(real_bench.datasets, t))


@pytest.fixture(scope="module")
def desk_bench(demo):
    names = ("bio", "cs", "fin")
    sets = [load_dataset(demo("datasets", n)) for n in names]
    manual = ManualContext({n: load_thesaurus(demo("thesauri", f"{n}.txt")) for n in names})
    res = Resources(gazetteer=load_wiki_titles(demo("wiki_titles_sample.txt"), load_wordlist()))
    return {ex: run_benchmark(sets, ex, res, ("B", "T", "PTW"), thesaurus_source=manual)
            for ex in ("statistical", "graph")}


@criterion("C4", surrogate=True)
@pytest.mark.parametrize("extractor", ["statistical", "graph"])
def test_desk_ptw_improves_two_thirds(desk_bench, extractor):
    ptw, _ = _improvement_checks(desk_bench[extractor])
    assert sum(ptw) * 3 >= 2 * len(ptw)


@criterion("C4", surrogate=True)
def test_desk_thesaurus_improves_every_dataset_graph(desk_bench):
    _, t = _improvement_checks(desk_bench["graph"])
    assert all(t)


@criterion("C4", surrogate=True)
@pytest.mark.xfail(strict=True, reason="cs demo set: the boosted gold terms already rank in "
                                       "the top 10 or too low to enter it, so T ties baseline")
def test_desk_thesaurus_improves_every_dataset_statistical(desk_bench):
    _, t = _improvement_checks(desk_bench["statistical"])
    assert all(t)


# --- 5. metric oracle --------------------------------------------------------

VOCAB = ["network", "networks", "graph", "graphs", "neural network", "neural networks",
         "tree", "trees", "learning", "deep learning", "kernel", "kernels", "model", "models"]


def brute_force(predictions, gold, k):
    tp = n_pred = n_gold = 0
    for pred, ref in zip(predictions, gold):
        ps, gs = [], []
        for phrase in pred[:k]:
            s = " ".join(stem(w) for w in phrase.split())
            if s not in ps:
                ps.append(s)
        for phrase in ref:
            s = " ".join(stem(w) for w in phrase.split())
            if s not in gs:
                gs.append(s)
        n_pred += len(ps)
        n_gold += len(gs)
        for s in ps:
            for g in gs:
                if s == g:
                    tp += 1
    p = tp / n_pred if n_pred else 0.0
    r = tp / n_gold if n_gold else 0.0
    return p, r, (2 * p * r / (p + r) if p + r else 0.0)


@criterion("C5")
def test_metric_matches_brute_force():
    rng = random.Random(5)
    for _ in range(1000):
        docs = rng.randint(1, 5)
        k = rng.randint(1, 6)
        preds = [rng.sample(VOCAB, rng.randint(0, 6)) for _ in range(docs)]
        gold = [rng.sample(VOCAB, rng.randint(0, 6)) for _ in range(docs)]
        r = micro_prf_at_k(preds, gold, k)
        assert (r.precision, r.recall, r.f1) == brute_force(preds, gold, k)


@criterion("C5")
def test_metric_hand_fixture():
    words = [f"zq{c}x" for c in "abcdefghijklm"]
    r = micro_prf_at_k([words[:10]], [words[5:13]])
    assert abs(r.precision - 0.5) <= 1e-9
    assert abs(r.recall - 0.625) <= 1e-9
    assert abs(r.f1 - 0.625 / 1.125) <= 1e-9


# --- 6. grammar regression ---------------------------------------------------

@criterion("C6")
def test_grammar_regression():
    for pattern in PUBLISHED["pos_patterns"]:
        assert match_pattern(pattern.split()), pattern
    for pattern in ("IN", "DT NN", "VB"):
        assert not match_pattern(pattern.split()), pattern


# --- 7. boost semantics ------------------------------------------------------

def _cand(i, score, pos, orientation):
    word = f"t{i}"
    tok = TaggedToken(Token(word, 0, pos), "NN", word, word)
    return CandidateKeyword(word, (Occurrence(pos, 0, (tok,)),), score, 1.0, orientation)


def _boost(cands, keys, factor):
    return thesaurus_boost(cands, Thesaurus("x", frozenset(keys)), BoostConfig(factor, factor))


@criterion("C7")
def test_boosting_never_demotes():
    rng = random.Random(7)
    for trial in range(10000):
        orientation = HIGHER_IS_BETTER if trial % 2 else LOWER_IS_BETTER
        n = rng.randint(1, 15)
        cands = [_cand(i, rng.choice([rng.random(), 0.5, 0.25]), rng.randint(0, 5), orientation)
                 for i in range(n)]
        keys = {c.key for c in cands if rng.random() < 0.4}
        before = [c.key for c in apply_weights(cands)]
        after = [c.key for c in apply_weights(_boost(cands, keys, rng.choice([1.25, 2.0, 4.0])))]
        for key in keys:
            assert after.index(key) <= before.index(key)
        same = [c.key for c in apply_weights(_boost(cands, keys, 1.0))]
        assert same == before


# --- 8. classifier protocol --------------------------------------------------

@criterion("C8")
def test_downsample_published_class_sizes():
    sizes = {"medical": 551443, "cs": 20110, "economics": 12243}
    labeled = [(None, lab) for lab, n in sizes.items() for _ in range(n)]
    out = downsample(labeled, seed=0)
    assert len(out) == 36729
    assert Counter(lab for _, lab in out) == {lab: 12243 for lab in sizes}


@criterion("C8")
def test_demo_cross_validation(demo):
    data = downsample(read_corpus(demo("context_corpus.tsv")), seed=0)
    assert cross_validate(data, folds=5, seed=0).mean_accuracy >= 0.95


@criterion("C8")
def test_models_byte_identical(demo, tmp_path):
    data = downsample(read_corpus(demo("context_corpus.tsv")), seed=7)
    for name in ("a.json", "b.json"):
        save_model(train_ovr(data, fit_tfidf(t for t, _ in data), TrainConfig(seed=7)), tmp_path / name)
    assert (tmp_path / "a.json").read_bytes() == (tmp_path / "b.json").read_bytes()


# --- 9. determinism ----------------------------------------------------------

@pytest.fixture
def cli(capsys, monkeypatch):
    monkeypatch.delenv("KEYFORGE_DATA", raising=False)

    def run(*argv):
        assert main([str(a) for a in argv]) == 0
        return capsys.readouterr().out.encode()
    return run


@criterion("C9")
def test_extract_deterministic(cli, demo):
    docs = [demo("datasets", n, "docsutf8", f"{n}0{i}.txt") for n in ("cs", "bio") for i in (1, 2, 3)]
    args = ["extract", "--steps", "PTW", "--thesaurus", demo("thesauri", "cs.txt"),
            "--wiki-titles", demo("wiki_titles_sample.txt"), "--scores", *docs]
    one = cli(*args, "--jobs", 1)
    assert one == cli(*args, "--jobs", 1)
    assert one == cli(*args, "--jobs", 8)


@criterion("C9")
def test_bench_deterministic(cli, demo, tmp_path):
    args = ["bench", "--wiki-titles", demo("wiki_titles_sample.txt")]
    for n in ("bio", "cs", "fin"):
        args += ["--thesaurus", f"{n}={demo('thesauri', f'{n}.txt')}"]
    outputs = []
    for tag, jobs in (("a", 1), ("b", 1), ("c", 8)):
        stdout = cli(*args, "--jobs", jobs, "--out", tmp_path / tag,
                     *(demo("datasets", n) for n in ("bio", "cs", "fin")))
        outputs.append((stdout, (tmp_path / f"{tag}.tsv").read_bytes(),
                        (tmp_path / f"{tag}.json").read_bytes()))
    assert outputs[0] == outputs[1] == outputs[2]
