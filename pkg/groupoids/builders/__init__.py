"""Groupoid constructions, the spec expression tree and the text parsers.

Canonical arrow numbering per construction is documented in
`constructions` and is stable across runs.
"""

from .constructions import (
    FiniteGroup,
    cyclic_group,
    symmetric_group,
    table_group,
    pair_groupoid,
    group_groupoid,
    action_groupoid,
    union_groupoid,
    product_groupoid,
    explicit_groupoid,
)
from .spec import (
    CyclicRef,
    SymRef,
    TableRef,
    PairSpec,
    GroupSpec,
    ActionSpec,
    UnionSpec,
    ProductSpec,
    ExplicitSpec,
    GroupoidSpec,
    build,
)
from .parser import Token, tokenize, parse_spec, parse_element

__all__ = [
    "FiniteGroup",
    "cyclic_group",
    "symmetric_group",
    "table_group",
    "pair_groupoid",
    "group_groupoid",
    "action_groupoid",
    "union_groupoid",
    "product_groupoid",
    "explicit_groupoid",
    "CyclicRef",
    "SymRef",
    "TableRef",
    "PairSpec",
    "GroupSpec",
    "ActionSpec",
    "UnionSpec",
    "ProductSpec",
    "ExplicitSpec",
    "GroupoidSpec",
    "build",
    "Token",
    "tokenize",
    "parse_spec",
    "parse_element",
]
