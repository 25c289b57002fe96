# coding: utf-8

# # Analysis of gold keywords
#
# Three views of human-assigned keywords: tag patterns, length in words and
# coverage by Wikipedia titles.

from keyforge._data import demo_path
from keyforge.analyze import (
    average_tables, ngram_distribution, pos_pattern_distribution, tables_tsv, wiki_coverage,
)
from keyforge.corpus import load_dataset, load_wiki_titles

datasets = [load_dataset(demo_path("datasets", n)) for n in ("bio", "cs", "fin")]

ngrams = [(ds.name, ngram_distribution(ds)) for ds in datasets]
ngrams.append(("average", average_tables([t for _, t in ngrams])))
print(tables_tsv(ngrams, wide=True))

pos = [(ds.name, pos_pattern_distribution(ds, top_n=5)) for ds in datasets]
print(tables_tsv([("average", average_tables([t for _, t in pos], top_n=5))]))

# Coverage uses the raw title list, without removing common words.

titles = load_wiki_titles(demo_path("wiki_titles_sample.txt"))
for ds in datasets:
    print(ds.name, f"{wiki_coverage(ds, titles):.2f}%")
