"""Penn Treebank tag inventory used by the tagger and the pattern grammar."""

WORD_TAGS = frozenset({
    "CC", "CD", "DT", "EX", "FW", "IN", "JJ", "JJR", "JJS", "LS", "MD",
    "NN", "NNS", "NNP", "NNPS", "PDT", "POS", "PRP", "PRP$", "RB", "RBR",
    "RBS", "RP", "SYM", "TO", "UH", "VB", "VBD", "VBG", "VBN", "VBP", "VBZ",
    "WDT", "WP", "WP$", "WRB",
})

PUNCT_TAGS = frozenset({".", ",", ":", "(", ")", "``", "''", "$", "#"})

PENN_TAGS = WORD_TAGS | PUNCT_TAGS

NOUN_TAGS = frozenset({"NN", "NNS", "NNP", "NNPS"})
