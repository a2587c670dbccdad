"""Weight diagrams, lift multiplicities and Grothendieck-level sl_Z actions
for the Deligne category Rep(GL_t)."""

from ._deligne import (
    InconsistencyError,
    ParseError,
    caps,
    diagram,
    diagram_json,
    eigenvalue,
    f_on_standard,
    fock_apply,
    hom_dim,
    lr_coeff,
    matrix,
    mult,
    tensor_apply,
    verify,
)

__all__ = [
    "InconsistencyError",
    "ParseError",
    "caps",
    "diagram",
    "diagram_json",
    "eigenvalue",
    "f_on_standard",
    "fock_apply",
    "hom_dim",
    "lr_coeff",
    "matrix",
    "mult",
    "tensor_apply",
    "verify",
]
