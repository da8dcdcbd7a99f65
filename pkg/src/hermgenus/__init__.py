"""Genera of quotients of the Hermitian curve H_q.

Closed-form genus catalogs for subgroups of the self-polar-triangle
stabilizer (any q) and of the pole-polar-pair stabilizer (q even) of
PGU(3,q), cross-checked by a brute-force matrix-group oracle over GF(q^2).
"""

from .families import GenusRecord, enumerate_family, genus, validate
from .gf import ZERO, CapacityError, DomainError, FieldCtx, make_ctx
from .oracle import close_group, genus_from_census, verify_family, verify_q
from .pgu import ElementClass, GramForm, classify, fixed_points_on_curve, make_gram
from .spectrum import TABLE1, check_table1, compute_spectrum

__version__ = "0.1.0"

__all__ = [
    "GenusRecord",
    "genus",
    "validate",
    "enumerate_family",
    "FieldCtx",
    "make_ctx",
    "ZERO",
    "CapacityError",
    "DomainError",
    "ElementClass",
    "GramForm",
    "classify",
    "fixed_points_on_curve",
    "make_gram",
    "close_group",
    "genus_from_census",
    "verify_family",
    "verify_q",
    "compute_spectrum",
    "check_table1",
    "TABLE1",
    "__version__",
]
