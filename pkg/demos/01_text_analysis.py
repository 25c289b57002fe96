# coding: utf-8

# # Text analysis
#
# Every extractor works on an analyzed document: sentences, tokens with
# character offsets, Penn Treebank tags, lemmas and Porter stems.

from keyforge.text import analyze, split_sentences, stem

text = ("Graph neural networks learn node representations. Dr. Smith trained "
        "deep learning models on 3.5 million citation graphs.")

for s in split_sentences(text):
    print(s)

# Each token keeps its surface form, tag, lemma and stem.

doc = analyze(text)
for t in doc.tokens[:10]:
    print(f"{t.surface:<16}{t.tag:<6}{t.lemma:<16}{t.stem}")

# The Porter stemmer is the 1980 algorithm, so a second pass can still
# change a word. Matching always stems exactly once.

for w in ("extraction", "generalization", "abuse"):
    print(w, stem(w), stem(stem(w)))
