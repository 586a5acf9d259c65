"""Beauville structures on permutation groups."""

from ._core import (
    BudgetExceeded,
    DatasetError,
    GroupDataset,
    InvalidAutomorphism,
    PermGroup,
    Permutation,
    Report,
    Triple,
    WordParseError,
    bundled,
    bundled_names,
    evaluate_row,
    is_conjugate,
    is_hyperbolic,
    load_group,
    make_triple,
    parse_group,
    search_mixed,
    search_unmixed,
    table_row,
    verify_mixed,
    verify_strongly_real,
    verify_unmixed,
)

__all__ = [name for name in dir() if not name.startswith("_")]
