"""Python bindings for the bicross retrieval library."""

from ._bicross import (
    BicrossError,
    Index,
    aggregate_topk,
    borda,
    cosine,
    derive_query,
    evaluate,
    extract_paragraphs,
    hashing_embed,
    ingest,
    normalize_tokens,
    overlap_scores,
    paired_t_test,
    rrf,
    run,
    split_sentences,
    stem,
    validate_config,
    wcombsum,
)

__all__ = [
    "BicrossError",
    "Index",
    "aggregate_topk",
    "borda",
    "cosine",
    "derive_query",
    "evaluate",
    "extract_paragraphs",
    "hashing_embed",
    "ingest",
    "normalize_tokens",
    "overlap_scores",
    "paired_t_test",
    "rrf",
    "run",
    "split_sentences",
    "stem",
    "validate_config",
    "wcombsum",
]
