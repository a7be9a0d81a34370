"""Exact verification of binomial-sum identities.

Thin Python surface over the C++ core: catalog access, instance and
sweep verification, DSL parsing, the transformation engine, and the
quadrature cross-check.
"""

from ._core import (
    BindError,
    ConfigError,
    EngineError,
    ParseError,
    __version__,
    catalog_entry,
    catalog_ids,
    eval_lhs,
    parse_canonical,
    quad_relerr,
    sweep_catalog,
    transform,
    verify,
    verify_text,
)

__all__ = [
    "BindError",
    "ConfigError",
    "EngineError",
    "ParseError",
    "__version__",
    "catalog_entry",
    "catalog_ids",
    "eval_lhs",
    "parse_canonical",
    "quad_relerr",
    "sweep_catalog",
    "transform",
    "verify",
    "verify_text",
]
