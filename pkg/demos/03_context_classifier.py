# coding: utf-8

# # Automatic context identification
#
# When no one picks a thesaurus by hand, a TF-IDF + one-vs-rest logistic
# regression model predicts each document's field and routes it to the
# matching thesaurus.

from collections import Counter

from keyforge._data import demo_path
from keyforge.context import (
    ContextLookup, ContextRouter, cross_validate, downsample, fit_tfidf, predict_context,
    read_corpus, train_ovr,
)

data = read_corpus(demo_path("context_corpus.tsv"))
print(Counter(label for _, label in data))

# Classes are balanced by sampling every class down to the smallest one.

balanced = downsample(data, seed=7)
print(Counter(label for _, label in balanced))

cv = cross_validate(balanced, folds=5, seed=7)
print("fold accuracies", cv.fold_accuracies, "mean", round(cv.mean_accuracy, 4))

clf = train_ovr(balanced, fit_tfidf(t for t, _ in balanced))
router = ContextRouter(clf, ContextLookup.from_file(demo_path("lookup.txt")))

for name in ("bio01", "cs02", "fin03"):
    folder = name[:-2]
    text = open(demo_path("datasets", folder, "docsutf8", f"{name}.txt"), encoding="utf-8").read()
    label, conf = predict_context(clf, text)
    print(name, label, round(conf, 3), "->", router.thesaurus_for(text).name)
