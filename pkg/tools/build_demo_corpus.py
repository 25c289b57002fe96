"""Generate the bundled 3-class context demo corpus (label<TAB>title<TAB>abstract).

Each class draws a fixed share of its tokens from its own term pool and the
rest from a pool shared by all classes, so the classes are separable by
construction. Output is fully determined by the seed.

    python tools/build_demo_corpus.py src/keyforge/data/demo/context_corpus.tsv
"""
import random
import sys

SHARED = """
study results method approach analysis paper propose present show new based using data
model models framework evaluate evaluation performance experiments experimental compare
significant significantly improve improved problem problems general set large small high
low different various several important effect effects process processes structure role
research investigate investigated observed find findings provide provides suggest term
measure measures level levels rate rates case cases time period effective efficiency
""".split()

POOLS = {
    "cs": """
algorithm algorithms neural network networks learning deep software compiler database
query queries graph graphs parallel distributed computing computation processor memory
cache protocol protocols encryption security classifier classification training dataset
embedding embeddings transformer semantic parsing program programs programming code
runtime kernel operating system systems cloud server servers latency throughput bandwidth
optimization heuristic search retrieval indexing recommender clustering vision image images
pixel robot robotics agent agents reinforcement compiler verification formal logic automata
""".split(),
    "bio": """
protein proteins gene genes genome genomic cell cells tissue expression sequencing rna dna
mutation mutations enzyme enzymes receptor receptors species population populations
evolution evolutionary phylogenetic organism organisms bacteria bacterial virus viral host
immune immunity antibody antibodies neuron neurons brain membrane metabolic metabolism
pathway pathways transcription regulatory binding molecular molecule cellular tumor cancer
clinical disease diseases infection ecology ecological plant plants chromosome allele
""".split(),
    "fin": """
market markets price prices asset assets portfolio portfolios risk return returns volatility
stock stocks bond bonds interest inflation monetary fiscal policy bank banks banking credit
loan loans investor investors trading option options derivative derivatives equity hedge
liquidity capital firm firms corporate tax taxes growth gdp unemployment labor wage wages
consumption household households economic economy econometric auction auctions insurance
exchange currency debt fund funds valuation pricing default earnings dividend
""".split(),
}

PER_CLASS = 80
DOMAIN_SHARE = 0.4


def sentence(rng, pool, n):
    return " ".join(rng.choice(pool) if rng.random() < DOMAIN_SHARE else rng.choice(SHARED)
                    for _ in range(n))


def main(out, seed=20211001):
    rng = random.Random(seed)
    rows = []
    for label in sorted(POOLS):
        pool = POOLS[label]
        for _ in range(PER_CLASS):
            title = sentence(rng, pool, rng.randint(4, 8)).capitalize()
            abstract = ". ".join(sentence(rng, pool, rng.randint(8, 16)).capitalize()
                                 for _ in range(rng.randint(3, 6))) + "."
            rows.append((label, title, abstract))
    rng.shuffle(rows)
    with open(out, "w", encoding="utf-8") as fh:
        for row in rows:
            fh.write("\t".join(row) + "\n")
    print(len(rows), "records ->", out)


if __name__ == "__main__":
    main(sys.argv[1])
