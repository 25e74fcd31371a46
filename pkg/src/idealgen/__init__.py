"""Exact tools for extremal bounded-degree generating sets of polynomial ideals."""

__version__ = "0.1.0"

from .fields import (  # noqa: F401
    FieldCtx,
    FieldElement,
    FieldMismatchError,
    element_order,
    embed,
    contract,
    field_for_order,
    frobenius,
    make_extension,
)
