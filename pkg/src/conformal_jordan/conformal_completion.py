"""Points of the conformal completion and the action of conformal generators.

The completion of the spin factor of dimension ``d`` is the projective null
quadric of ``R^{2,d}``; a point is a null ray.  For matrix families it is the
Lagrangian Grassmannian of ``Omega`` in ``K^{2n}``; a point is a ``2n x n``
matrix whose columns span an isotropic subspace.  Chart points ``v`` embed
as ``eta(v)`` (spin) or as the graph ``[v; 1]`` (matrix families).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Union

import numpy as np
import scipy.linalg

from .config import tol_algebra
from .errors import ModelMismatch, NonGroupMatrix, UnsupportedFamily
from .jordan_core import (
    AlgebraDescriptor,
    Family,
    JordanElement,
    check_element,
    family_label,
    from_matrix,
    make_algebra,
    minkowski_form,
    spectral_decompose,
    to_matrix,
)
from .lie_structure import LieMatrix, LieModel, as_array, euler_elements, matrix_model, realify

POINT_TOL = 1e-8


class PointModel(str, Enum):
    QUADRIC_RAY = "QuadricRay"
    ISOTROPIC_SUBSPACE = "IsotropicSubspace"


def quadric_form(d: int) -> np.ndarray:
    """Gram matrix ``diag(1, 1, -1, ..., -1)`` of ``R^{2,d}``."""
    return np.diag([1.0, 1.0] + [-1.0] * d)


def quadric_pairing(x: np.ndarray, y: np.ndarray) -> float:
    """The form of ``R^{2,d}`` on two vectors."""
    return float(x[0] * y[0] + x[1] * y[1] - np.dot(x[2:], y[2:]))


def _point_model(algebra: AlgebraDescriptor) -> PointModel:
    if algebra.family is Family.SPIN:
        return PointModel.QUADRIC_RAY
    if algebra.is_matrix_family:
        return PointModel.ISOTROPIC_SUBSPACE
    raise UnsupportedFamily(f"no completion model for {algebra.name}")


@dataclass(frozen=True, eq=False)
class CompletionPoint:
    """A point of the conformal completion, given by a representative ray or subspace basis."""

    algebra: AlgebraDescriptor
    rep: np.ndarray

    def __post_init__(self) -> None:
        rep = np.asarray(self.rep)
        model = _point_model(self.algebra)
        scale = max(1.0, float(np.abs(rep).max()) if rep.size else 1.0)
        if model is PointModel.QUADRIC_RAY:
            if rep.shape != (self.algebra.size + 2,) or not np.any(np.abs(rep) > POINT_TOL):
                raise ModelMismatch("quadric ray must be a nonzero vector of length d + 2")
            if abs(quadric_pairing(rep, rep)) > tol_algebra() * scale**2:
                raise ModelMismatch("representative is not a null vector")
        else:
            n = self.algebra.matrix_size
            if rep.shape != (2 * n, n):
                raise ModelMismatch(f"subspace representative must be {2 * n} x {n}")
            form = _omega(n)
            if np.abs(rep.conj().T @ form @ rep).max() > tol_algebra() * scale**2:
                raise ModelMismatch("columns do not span an isotropic subspace")
            if np.linalg.matrix_rank(rep, tol=POINT_TOL * scale) != n:
                raise ModelMismatch("representative does not have full column rank")
        object.__setattr__(self, "rep", rep)

    @property
    def model(self) -> PointModel:
        return _point_model(self.algebra)

    def normalized(self) -> np.ndarray:
        """Unit ray with positive first significant entry, or an orthonormal column basis."""
        if self.model is PointModel.QUADRIC_RAY:
            unit = self.rep / np.linalg.norm(self.rep)
            first = unit[np.argmax(np.abs(unit) > POINT_TOL)]
            return unit * np.sign(first)
        q, _ = np.linalg.qr(self.rep)
        return q

    def projector(self) -> np.ndarray:
        basis = self.normalized()
        if basis.ndim == 1:
            return np.outer(basis, basis)
        return basis @ basis.conj().T

    def distance(self, other: "CompletionPoint") -> float:
        """Operator-norm distance of the orthogonal projectors."""
        _check_same(self, other)
        return float(np.linalg.norm(self.projector() - other.projector(), 2))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CompletionPoint) or other.algebra != self.algebra:
            return NotImplemented
        return self.distance(other) <= POINT_TOL

    __hash__ = None

    def to_json(self) -> dict:
        rep = self.rep.reshape(1, -1) if self.rep.ndim == 1 else realify(self.rep)
        return {
            "model": self.model.value,
            "algebra": {"family": family_label(self.algebra), "size": self.algebra.size},
            "rep": np.real(rep).tolist(),
        }

    @classmethod
    def from_json(cls, data: dict) -> "CompletionPoint":
        algebra = make_algebra(data["algebra"]["family"], int(data["algebra"]["size"]))
        rep = np.asarray(data["rep"], dtype=float)
        if PointModel(data["model"]) is PointModel.QUADRIC_RAY:
            return cls(algebra, rep.ravel())
        if algebra.field == "R":
            return cls(algebra, rep)
        # realified blocks [[Re, -Im], [Im, Re]] of a 2n x n matrix
        rows, cols = rep.shape[0] // 2, rep.shape[1] // 2
        return cls(algebra, rep[:rows, :cols] + 1j * rep[rows:, :cols])


def _omega(n: int) -> np.ndarray:
    eye, zeros = np.eye(n), np.zeros((n, n))
    return np.block([[zeros, eye], [-eye, zeros]])


def _check_same(p: CompletionPoint, q: CompletionPoint) -> None:
    if p.algebra != q.algebra:
        raise ModelMismatch(f"points live in completions of {p.algebra.name} and {q.algebra.name}")


# ---------------------------------------------------------------------------
# chart


def embed_point(v: JordanElement) -> CompletionPoint:
    """``eta(v)`` for the spin factor, the graph ``[v; 1]`` for matrix families."""
    check_element(v)
    algebra = v.algebra
    if _point_model(algebra) is PointModel.QUADRIC_RAY:
        beta = minkowski_form(v)
        return CompletionPoint(algebra, np.concatenate([[(1.0 - beta) / 2.0], v.coords, [-(1.0 + beta) / 2.0]]))
    block = to_matrix(v)
    if algebra.field == "R":
        block = np.real(block)
    return CompletionPoint(algebra, np.vstack([block, np.eye(block.shape[0])]))


def chart_pullback(p: CompletionPoint, tol: float | None = None) -> JordanElement | None:
    """Chart preimage of ``p``, or ``None`` when ``p`` lies at infinity."""
    tol = tol_algebra() if tol is None else tol
    algebra = p.algebra
    if p.model is PointModel.QUADRIC_RAY:
        x = p.normalized()
        denominator = x[0] - x[-1]
        if abs(denominator) <= tol:
            return None
        return JordanElement(algebra, x[1:-1] / denominator)
    basis = p.normalized()
    n = algebra.matrix_size
    upper, lower = basis[:n], basis[n:]
    if np.linalg.svd(lower, compute_uv=False)[-1] <= tol:
        return None
    return from_matrix(algebra, upper @ np.linalg.inv(lower))


# ---------------------------------------------------------------------------
# generators


@dataclass(frozen=True)
class Translate:
    v: JordanElement


@dataclass(frozen=True)
class Dilate:
    t: float


@dataclass(frozen=True)
class Inversion:
    pass


@dataclass(frozen=True)
class MoebiusRho:
    t: float


@dataclass(frozen=True, eq=False)
class MatrixGenerator:
    g: LieMatrix | np.ndarray


ConformalGenerator = Union[Translate, Dilate, Inversion, MoebiusRho, MatrixGenerator]


def generator_matrix(gen: ConformalGenerator, algebra: AlgebraDescriptor) -> np.ndarray:
    """Group matrix of ``gen`` in the model of ``algebra``."""
    _point_model(algebra)
    model = matrix_model(algebra)
    euler = euler_elements(model)
    if isinstance(gen, Translate):
        if gen.v.algebra != algebra:
            raise ModelMismatch(f"translation by an element of {gen.v.algebra.name}")
        return model.exp(model.translation(gen.v))
    if isinstance(gen, Dilate):
        return model.exp(gen.t * model.h)
    if isinstance(gen, Inversion):
        return model.exp(np.pi * euler.zk.mat)
    if isinstance(gen, MoebiusRho):
        return model.exp(gen.t * euler.zk.mat)
    if isinstance(gen, MatrixGenerator):
        g = as_array(gen.g)
        if isinstance(gen.g, LieMatrix) and gen.g.model is not model:
            raise ModelMismatch("group matrix belongs to a different model")
        if g.shape != (model.matrix_size, model.matrix_size):
            raise ModelMismatch(f"group matrix must be {model.matrix_size} x {model.matrix_size}")
        if not model.is_group(g):
            raise NonGroupMatrix("matrix violates the group condition")
        return g
    raise TypeError(f"unknown generator {gen!r}")


def apply_generator(gen: ConformalGenerator, p: CompletionPoint) -> CompletionPoint:
    g = generator_matrix(gen, p.algebra)
    rep = g @ p.rep
    if p.model is PointModel.QUADRIC_RAY or p.algebra.field == "R":
        rep = np.real(rep)
    return CompletionPoint(p.algebra, rep)


def inversion(v: JordanElement) -> CompletionPoint:
    """``theta_V`` applied to the chart point ``v`` (defined on all of the completion)."""
    return apply_generator(Inversion(), embed_point(v))


# ---------------------------------------------------------------------------
# Cayley transform and transversality


def cayley_real(z: JordanElement, tol: float | None = None) -> JordanElement | None:
    """``(e + z)(e - z)^{-1}`` by spectral calculus; ``None`` if ``1`` is an eigenvalue of ``z``."""
    tol = tol_algebra() if tol is None else tol
    check_element(z)
    spectral = spectral_decompose(z)
    lam = spectral.eigenvalues
    if np.any(np.abs(1.0 - lam) <= tol):
        return None
    images = (1.0 + lam) / (1.0 - lam)
    coords = sum(value * c.coords for value, c in zip(images, spectral.frame))
    return JordanElement(z.algebra, np.asarray(coords, dtype=float))


def inverse_cayley_real(v: JordanElement, tol: float | None = None) -> JordanElement | None:
    """``(v - e)(v + e)^{-1}``; ``None`` if ``-1`` is an eigenvalue of ``v``."""
    tol = tol_algebra() if tol is None else tol
    spectral = spectral_decompose(check_element(v))
    lam = spectral.eigenvalues
    if np.any(np.abs(1.0 + lam) <= tol):
        return None
    images = (lam - 1.0) / (lam + 1.0)
    coords = sum(value * c.coords for value, c in zip(images, spectral.frame))
    return JordanElement(v.algebra, np.asarray(coords, dtype=float))


def transversal(p: CompletionPoint, q: CompletionPoint, tol: float | None = None) -> bool:
    """Whether ``(p, q)`` lies in the open orbit of pairs."""
    tol = tol_algebra() if tol is None else tol
    _check_same(p, q)
    a, b = p.normalized(), q.normalized()
    if p.model is PointModel.QUADRIC_RAY:
        return abs(quadric_pairing(a, b)) > tol
    return bool(np.linalg.svd(np.hstack([a, b]), compute_uv=False)[-1] > tol)


def model_of(p: CompletionPoint) -> LieModel:
    return matrix_model(p.algebra)


def random_group_element(algebra: AlgebraDescriptor, rng: np.random.Generator, scale: float = 0.5) -> np.ndarray:
    """``exp`` of a random Lie algebra element; handy for group-action checks."""
    model = matrix_model(algebra)
    return scipy.linalg.expm(model.from_coords(rng.normal(scale=scale, size=model.dim)))


__all__ = [
    "CompletionPoint",
    "ConformalGenerator",
    "Dilate",
    "Inversion",
    "MatrixGenerator",
    "MoebiusRho",
    "PointModel",
    "Translate",
    "apply_generator",
    "cayley_real",
    "chart_pullback",
    "embed_point",
    "generator_matrix",
    "inverse_cayley_real",
    "inversion",
    "quadric_form",
    "quadric_pairing",
    "random_group_element",
    "transversal",
]
