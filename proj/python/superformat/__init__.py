"""Exact matrix formats of Lie superalgebras.

Matrices are lists of rows of ``fractions.Fraction``; gradings are lists of
+1/-1 signs, one per basis vector.
"""

from ._superformat import (
    ConsistencyError,
    FormatError,
    alternating_perm,
    cartan_matrix,
    change_format,
    chevalley_basis,
    graded_commutator,
    highest_weights,
    inverse_cartan,
    is_member,
    odd_simple_root_count,
    osp_L,
    perm_matrix,
    principal_triple,
    simple_roots,
    supermetric,
    supertrace,
    supertranspose,
    verify_chevalley,
)

__all__ = [
    "ConsistencyError",
    "FormatError",
    "alternating_perm",
    "cartan_matrix",
    "change_format",
    "chevalley_basis",
    "graded_commutator",
    "highest_weights",
    "inverse_cartan",
    "is_member",
    "odd_simple_root_count",
    "osp_L",
    "perm_matrix",
    "principal_triple",
    "simple_roots",
    "supermetric",
    "supertrace",
    "supertranspose",
    "verify_chevalley",
]
