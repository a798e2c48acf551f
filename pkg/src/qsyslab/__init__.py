"""qsyslab: numerical verification of unitary Frobenius algebras, finite
quantum group bimodules and quantum bi-elements, plus a small typed
expression language for building and comparing the morphisms involved."""

from .core import (
    DEFAULT_TOL,
    LinearMap,
    Space,
    Tolerance,
    Word,
    adjoint,
    approx_eq,
    compose,
    identity,
    tensor,
    word,
)

__version__ = "0.1.0"
