"""Wire-typed dense complex linear algebra.

Morphisms between tensor products of finite dimensional Hilbert spaces are
stored as plain complex matrices tagged with a domain and codomain *word*
(an ordered list of named spaces).  Composition refuses to glue mismatched
wires, which is what keeps every higher-level axiom check honest.

Conventions, fixed once and used everywhere:

* basis order: the leftmost tensor factor is most significant, so the basis
  vector ``e_i (x) e_j`` of ``C^m (x) C^n`` sits at flat index ``i*n + j``
  (this is exactly ``numpy.kron``);
* matrices act on column vectors, ``M[r, c]`` is the coefficient of codomain
  basis vector ``r`` in the image of domain basis vector ``c``, so
  composition of maps is the ordinary matrix product;
* the empty word is the monoidal unit C, of dimension 1;
* closeness is measured by the maximum absolute entry difference.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import prod

import numpy as np

__all__ = [
    "Space",
    "Word",
    "LinearMap",
    "Tolerance",
    "DEFAULT_TOL",
    "QsysLabError",
    "WireMismatch",
    "NotAProjection",
    "VerificationFailed",
    "compose",
    "tensor",
    "adjoint",
    "identity",
    "add",
    "scale",
    "residual",
    "approx_eq",
    "is_isometry",
    "is_coisometry",
    "is_projection",
    "is_unitary",
    "range_factorize",
]


class QsysLabError(Exception):
    """Base class for all errors raised by this package."""


class WireMismatch(QsysLabError):
    """Two words that were required to match do not."""


class NotAProjection(QsysLabError):
    """A map required to be an orthogonal projection is not one."""


class VerificationFailed(QsysLabError):
    """A construction's precondition (a passing verifier) does not hold."""


@dataclass(frozen=True)
class Space:
    """A named finite dimensional Hilbert space.

    Declared spaces have dim >= 1; dimension 0 is admitted only so that the
    range of the zero projection is representable.
    """

    name: str
    dim: int

    def __post_init__(self):
        if self.dim < 0:
            raise ValueError(f"space {self.name!r} must have dim >= 0, got {self.dim}")

    def __repr__(self):
        return f"{self.name}[{self.dim}]"


@dataclass(frozen=True)
class Word:
    """An ordered list of spaces; the empty word is the monoidal unit C."""

    factors: tuple[Space, ...] = ()

    @property
    def dim(self) -> int:
        return prod(s.dim for s in self.factors)

    def __add__(self, other: "Word") -> "Word":
        return Word(self.factors + other.factors)

    def __repr__(self):
        if not self.factors:
            return "1"
        return " ⊗ ".join(s.name for s in self.factors)


def word(*spaces: Space) -> Word:
    return Word(tuple(spaces))


UNIT_WORD = Word()


@dataclass(frozen=True)
class Tolerance:
    """Absolute max-entry threshold for numerical equality."""

    eps: float = 1e-9

    def __post_init__(self):
        if self.eps < 0:
            raise ValueError(f"tolerance must be >= 0, got {self.eps}")


DEFAULT_TOL = Tolerance()


def _eps(tol) -> float:
    if isinstance(tol, Tolerance):
        return tol.eps
    return float(tol)


def _as_matrix(matrix, rows: int, cols: int) -> np.ndarray:
    m = np.asarray(matrix, dtype=complex)
    if m.shape != (rows, cols):
        raise WireMismatch(f"matrix shape {m.shape} does not match words ({rows}, {cols})")
    if m.size and not np.all(np.isfinite(m.view(float))):
        raise ValueError("matrix entries must be finite")
    m = m.copy()
    m.setflags(write=False)
    return m


@dataclass(frozen=True, eq=False)
class LinearMap:
    """A linear map between words, stored as a dense complex matrix."""

    domain: Word
    codomain: Word
    matrix: np.ndarray = field(repr=False)

    def __post_init__(self):
        object.__setattr__(
            self, "matrix", _as_matrix(self.matrix, self.codomain.dim, self.domain.dim)
        )

    def __eq__(self, other):
        if not isinstance(other, LinearMap):
            return NotImplemented
        return (
            self.domain == other.domain
            and self.codomain == other.codomain
            and np.array_equal(self.matrix, other.matrix)
        )

    # diagrammatic sugar: f >> g is "f then g", f @ g is side by side
    def __rshift__(self, other: "LinearMap") -> "LinearMap":
        return compose(other, self)

    def __matmul__(self, other: "LinearMap") -> "LinearMap":
        return tensor(self, other)

    @property
    def H(self) -> "LinearMap":
        return adjoint(self)

    def __repr__(self):
        return f"LinearMap({self.domain!r} -> {self.codomain!r})"


def compose(g: LinearMap, f: LinearMap) -> LinearMap:
    """g after f; the inner words must agree factor by factor."""
    if f.codomain != g.domain:
        raise WireMismatch(
            f"cannot compose: codomain {f.codomain!r} != domain {g.domain!r}"
        )
    return LinearMap(f.domain, g.codomain, g.matrix @ f.matrix)


def tensor(f: LinearMap, g: LinearMap) -> LinearMap:
    """Side-by-side product; the left factor is most significant."""
    return LinearMap(f.domain + g.domain, f.codomain + g.codomain, np.kron(f.matrix, g.matrix))


def adjoint(f: LinearMap) -> LinearMap:
    """Conjugate transpose; an exact involution."""
    return LinearMap(f.codomain, f.domain, f.matrix.conj().T)


def identity(w: Word) -> LinearMap:
    return LinearMap(w, w, np.eye(w.dim, dtype=complex))


def add(f: LinearMap, g: LinearMap) -> LinearMap:
    if f.domain != g.domain or f.codomain != g.codomain:
        raise WireMismatch(f"cannot add maps of different signature: {f!r} vs {g!r}")
    return LinearMap(f.domain, f.codomain, f.matrix + g.matrix)


def scale(c: complex, f: LinearMap) -> LinearMap:
    return LinearMap(f.domain, f.codomain, c * f.matrix)


def residual(f: LinearMap, g: LinearMap) -> float:
    """Max absolute entry difference of two maps with equal signature."""
    if f.domain != g.domain or f.codomain != g.codomain:
        raise WireMismatch(
            f"cannot compare maps of different signature: "
            f"({f.domain!r} -> {f.codomain!r}) vs ({g.domain!r} -> {g.codomain!r})"
        )
    if f.matrix.size == 0:
        return 0.0
    return float(np.max(np.abs(f.matrix - g.matrix)))


def approx_eq(f: LinearMap, g: LinearMap, tol=DEFAULT_TOL) -> bool:
    return residual(f, g) <= _eps(tol)


def is_isometry(f: LinearMap, tol=DEFAULT_TOL) -> bool:
    """f* f = id on the domain."""
    return approx_eq(compose(adjoint(f), f), identity(f.domain), tol)


def is_coisometry(f: LinearMap, tol=DEFAULT_TOL) -> bool:
    """f f* = id on the codomain."""
    return approx_eq(compose(f, adjoint(f)), identity(f.codomain), tol)


def is_projection(p: LinearMap, tol=DEFAULT_TOL) -> bool:
    """p is idempotent and self-adjoint (domain must equal codomain)."""
    if p.domain != p.codomain:
        raise WireMismatch(f"projection must be an endomorphism, got {p!r}")
    return approx_eq(compose(p, p), p, tol) and approx_eq(adjoint(p), p, tol)


def is_unitary(f: LinearMap, tol=DEFAULT_TOL) -> bool:
    return is_isometry(f, tol) and is_coisometry(f, tol)


def projection_defect(p: LinearMap) -> float:
    """Max of the idempotence and self-adjointness residuals."""
    return max(residual(compose(p, p), p), residual(adjoint(p), p))


_fresh_range_names = itertools.count()


def range_factorize(p: LinearMap, tol=DEFAULT_TOL) -> LinearMap:
    """Factor a projection p as iso ∘ iso* with iso an isometry from its range.

    The returned map has a fresh space of dimension rank(p) as domain and
    p's word as codomain, and satisfies iso ∘ iso* ≈ p and iso* ∘ iso = id
    within 10x the verification tolerance.

    Eigenvalues of (the Hermitian part of) p cluster at {0, 1} whenever the
    precondition holds, so the 1/2 cut is unambiguous.
    """
    eps = _eps(tol)
    if p.domain != p.codomain:
        raise WireMismatch(f"projection must be an endomorphism, got {p!r}")
    defect = projection_defect(p)
    if defect > eps:
        raise NotAProjection(
            f"not a projection within eps={eps:g}: residual {defect:.3e}"
        )
    herm = (p.matrix + p.matrix.conj().T) / 2
    vals, vecs = np.linalg.eigh(herm)
    cols = vecs[:, vals > 0.5]
    if cols.shape[1]:
        # eigh already returns orthonormal columns; re-orthonormalize anyway
        cols, _ = np.linalg.qr(cols)
    rank = cols.shape[1]
    fresh = Space(f"rng{next(_fresh_range_names)}", rank)
    return LinearMap(Word((fresh,)), p.codomain, cols)
