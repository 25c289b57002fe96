"""Keyword extraction with universal post-processing.

Candidates from an unsupervised extractor are filtered by PoS patterns and
re-weighted by a domain thesaurus and a Wikipedia title gazetteer.
"""
from .corpus import (
    DictionarySet, EntityGazetteer, KeDataset, Thesaurus, load_dataset, load_thesaurus,
    load_wiki_titles, load_wordlist,
)
from .errors import KeyforgeError
from .extract import ExtractorConfig, extract
from .postprocess import BoostConfig, PatternGrammar, Resources, postprocess, run_pipeline
from .text import Document
from .text import analyze as analyze_text

__version__ = "0.1.0"

__all__ = [
    "BoostConfig", "DictionarySet", "Document", "EntityGazetteer", "ExtractorConfig",
    "KeDataset", "KeyforgeError", "PatternGrammar", "Resources", "Thesaurus", "analyze_text",
    "extract", "load_dataset", "load_thesaurus", "load_wiki_titles", "load_wordlist",
    "postprocess", "run_pipeline",
]
