# coding: utf-8

# # Benchmarking step combinations
#
# Micro-averaged P/R/F1@10 with stemmed exact matching, for every subset of
# {P, T, W}, on three small bundled datasets.

from keyforge._data import demo_path
from keyforge.corpus import load_dataset, load_thesaurus, load_wiki_titles, load_wordlist
from keyforge.evaluation import ManualContext, report_tsv, run_benchmark, summary_lines
from keyforge.postprocess import Resources

names = ("bio", "cs", "fin")
datasets = [load_dataset(demo_path("datasets", n)) for n in names]
manual = ManualContext({n: load_thesaurus(demo_path("thesauri", f"{n}.txt")) for n in names})
res = Resources(gazetteer=load_wiki_titles(demo_path("wiki_titles_sample.txt"), load_wordlist()))

for extractor in ("statistical", "graph"):
    report = run_benchmark(datasets, extractor, res, thesaurus_source=manual)
    print(f"## {extractor}")
    print("\n".join(summary_lines(report)))

# The full grid as written by the bench command.

print(report_tsv(report))
