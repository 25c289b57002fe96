# coding: utf-8

# # Keyword extraction with post-processing
#
# Two unsupervised scorers rank candidate phrases. Three optional steps then
# refine the ranking: a PoS-pattern filter (P), a thesaurus boost (T) and a
# Wikipedia-title boost (W).

from keyforge import Resources, analyze_text, extract, run_pipeline
from keyforge._data import demo_path
from keyforge.corpus import load_thesaurus, load_wiki_titles, load_wordlist

text = open(demo_path("datasets", "cs", "docsutf8", "cs01.txt"), encoding="utf-8").read()
gold = open(demo_path("datasets", "cs", "keys", "cs01.key"), encoding="utf-8").read().split("\n")
doc = analyze_text(text, "cs01")
print(text[:300], "...")
print("gold:", [g for g in gold if g])

# Baselines.

for extractor in ("statistical", "graph"):
    print(extractor, extract(doc, extractor)[:5])

# Resources: a controlled vocabulary and a title list with common English
# unigrams removed.

res = Resources(thesaurus=load_thesaurus(demo_path("thesauri", "cs.txt")),
                gazetteer=load_wiki_titles(demo_path("wiki_titles_sample.txt"), load_wordlist()))
print(len(res.thesaurus), "thesaurus terms,", len(res.gazetteer.titles), "titles")

# All eight step combinations on the graph scorer.

for steps in ("", "P", "T", "W", "PT", "PW", "TW", "PTW"):
    print(f"{steps or 'B':<4}", run_pipeline(doc, "graph", steps, res, k=5))
