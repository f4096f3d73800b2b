"""compalg: exact verification of paired associative multiplications and
their invariant operators (derivations, centroids, Rota-Baxter/Nijenhuis/
averaging/Reynolds operators), with a finite-field enumeration oracle and a
catalog diff reporter."""

from .scalars import (
    QQ,
    GF,
    FieldMismatchError,
    FpElem,
    FunctionField,
    Poly,
    RatFunc,
    ReductionError,
    ScalarSyntaxError,
    SpecializationError,
    parse_scalar,
    poly_eval,
    reduce_mod_p,
)

__version__ = "0.1.0"

__all__ = [
    "QQ",
    "GF",
    "FieldMismatchError",
    "FpElem",
    "FunctionField",
    "Poly",
    "RatFunc",
    "ReductionError",
    "ScalarSyntaxError",
    "SpecializationError",
    "parse_scalar",
    "poly_eval",
    "reduce_mod_p",
    "__version__",
]
