"""U-invariants and perpetuants of binary forms in exact arithmetic."""

from ._core import (
    ComplementCertificate,
    DomainError,
    Error,
    FamilyMismatchError,
    InhomogeneousError,
    InternalError,
    InvariantElement,
    ParseError,
    Poly,
    c_k,
    degree2_perpetuant,
    dim_series,
    kernel_oracle,
    perpetuant_basis,
    potenziante_text,
    q_n_leading_exponent,
    relations,
    span_equal,
    stroh_series,
    threshold,
    u_basis,
    verify_complement,
)

__all__ = [
    "ComplementCertificate",
    "DomainError",
    "Error",
    "FamilyMismatchError",
    "InhomogeneousError",
    "InternalError",
    "InvariantElement",
    "ParseError",
    "Poly",
    "c_k",
    "degree2_perpetuant",
    "dim_series",
    "kernel_oracle",
    "perpetuant_basis",
    "potenziante_text",
    "q_n_leading_exponent",
    "relations",
    "span_equal",
    "stroh_series",
    "threshold",
    "u_basis",
    "verify_complement",
]
