"""Unitary groups of skew-hermitian forms embedded in the Lagrangian Grassmannian.

For a skew-hermitian ``J`` on ``F = K^r`` the form ``beta_F(v, w) = v* (2J) w``
and its negative give a splitting ``K^{2r} = F_1 + F_2`` of the space with
form ``Omega``, where

    F_1 = image of Psi_1 = [-J; 1]   (restricted form  2J),
    F_2 = image of Psi_2 = [ J; 1]   (restricted form -2J).

A unitary ``g`` of ``beta_F`` is embedded as the isotropic graph
``Gamma(g) = image of Psi_1 + Psi_2 g``.  With this arrangement
``Gamma(1)`` and ``Gamma(-1)`` are the ``-1/2`` and ``+1/2`` eigenspaces of
``h = diag(1, -1) / 2``.  Quaternionic matrices use the complex embedding.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from enum import Enum

import numpy as np
import scipy.linalg

from .conformal_completion import CompletionPoint
from .errors import ChartSingular, NotUnitary, SizeMismatch
from .jordan_core import JordanElement, QUATERNION_UNITS, make_algebra, quaternionic_structure, to_matrix
from .lie_structure import _null_space_basis, dagger, symplectic_form

GROUP_TOL = 1e-8
PSD_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class FormSpace:
    """``F = K^r`` with the skew-hermitian structure ``J`` and the form ``2J``."""

    field: str
    r: int
    J: np.ndarray = field(repr=False)
    negative: int = 0

    @property
    def size(self) -> int:
        """Side length of the (complex) matrices acting on ``F``."""
        return self.J.shape[0]

    @property
    def form(self) -> np.ndarray:
        return 2.0 * self.J

    @property
    def algebra(self):
        family = {"R": "SymR", "C": "HermC", "H": "HermH"}[self.field]
        return make_algebra(family, self.r)

    def to_json(self) -> dict:
        from .lie_structure import realify

        return {"field": self.field, "r": self.r, "J": realify(self.J).tolist()}


def make_form_space(field: str, r: int, negative: int = 0) -> FormSpace:
    """``Omega_r`` (``K = R``, ``r`` even), ``i I_{r-q,q}`` (``K = C``) or ``i 1_r`` (``K = H``)."""
    if field == "R":
        if r % 2:
            raise SizeMismatch("the real form needs even r")
        return FormSpace("R", r, symplectic_form(r // 2))
    if field == "C":
        if not 0 <= negative <= r:
            raise SizeMismatch(f"negative part must lie in [0, {r}]")
        return FormSpace("C", r, 1j * np.diag([1.0] * (r - negative) + [-1.0] * negative), negative)
    if field == "H":
        return FormSpace("H", r, np.kron(np.eye(r), QUATERNION_UNITS[1]))
    raise SizeMismatch(f"unknown field {field!r}")


class CheckMode(str, Enum):
    GROUP = "Group"
    CONE_ELEMENT = "ConeElement"


def _is_quaternionic(x: np.ndarray, tol: float) -> bool:
    jq = quaternionic_structure(x.shape[0] // 2)
    return bool(np.abs(x @ jq - jq @ x.conj()).max() <= tol)


def unitary_and_cone_check(matrix: np.ndarray, space: FormSpace, mode: CheckMode | str = CheckMode.GROUP) -> bool:
    """Group membership ``g* (2J) g = 2J`` or membership in the invariant cone of the Lie algebra."""
    mode = CheckMode(mode)
    x = np.asarray(matrix)
    if x.shape != (space.size, space.size):
        raise SizeMismatch(f"expected a {space.size} x {space.size} matrix, got {x.shape}")
    scale = max(1.0, float(np.abs(x).max()) ** 2)
    if space.field == "R" and np.iscomplexobj(x) and np.abs(x.imag).max() > GROUP_TOL:
        return False
    if space.field == "H" and not _is_quaternionic(x, GROUP_TOL * scale):
        return False
    b = space.form
    if mode is CheckMode.GROUP:
        return bool(np.abs(dagger(x) @ b @ x - b).max() <= GROUP_TOL * scale)
    if np.abs(dagger(x) @ b + b @ x).max() > GROUP_TOL * scale:
        return False
    gram = b @ x
    return bool(np.linalg.eigvalsh(0.5 * (gram + dagger(gram)))[0] >= -PSD_TOL * scale)


@functools.lru_cache(maxsize=None)
def _unitary_algebra_basis(field: str, r: int, negative: int) -> np.ndarray:
    space = make_form_space(field, r, negative)

    def residual(x: np.ndarray) -> np.ndarray:
        parts = [(dagger(x) @ space.form + space.form @ x).ravel()]
        if field == "H":
            jq = quaternionic_structure(r)
            parts.append((x @ jq - jq @ x.conj()).ravel())
        return np.concatenate(parts)

    return _null_space_basis(space.size, field != "R", residual)


def unitary_algebra_dim(space: FormSpace) -> int:
    """Dimension of ``u(F, beta_F)`` from its defining linear system."""
    return int(_unitary_algebra_basis(space.field, space.r, space.negative).shape[0])


def random_unitary(space: FormSpace, rng: np.random.Generator, scale: float = 0.5) -> np.ndarray:
    basis = _unitary_algebra_basis(space.field, space.r, space.negative)
    return scipy.linalg.expm(np.tensordot(rng.normal(scale=scale, size=basis.shape[0]), basis, axes=1))


def random_cone_element(space: FormSpace, rng: np.random.Generator) -> np.ndarray:
    """``A = (2J)^{-1} S`` for a random positive definite ``S`` of the right type."""
    n = space.size
    raw = rng.standard_normal((n, n)) + (1j * rng.standard_normal((n, n)) if space.field != "R" else 0)
    if space.field == "H":
        jq = quaternionic_structure(space.r)
        raw = 0.5 * (raw + jq @ raw.conj() @ np.linalg.inv(jq))
    positive = raw @ dagger(raw) + 0.1 * np.eye(n)
    return np.linalg.solve(space.form, positive)


# ---------------------------------------------------------------------------
# embedding and actions


def _frames(space: FormSpace) -> tuple[np.ndarray, np.ndarray]:
    eye = np.eye(space.size)
    return np.vstack([-space.J, eye]), np.vstack([space.J, eye])


def _point_rep(space: FormSpace, rep: np.ndarray) -> np.ndarray:
    return np.real(rep) if space.field == "R" else rep.astype(complex)


def graph_embedding(g: np.ndarray, space: FormSpace) -> CompletionPoint:
    """The isotropic subspace ``Gamma(g)``."""
    g = np.asarray(g)
    if not unitary_and_cone_check(g, space, CheckMode.GROUP):
        raise NotUnitary("matrix does not preserve beta_F")
    psi1, psi2 = _frames(space)
    return CompletionPoint(space.algebra, _point_rep(space, psi1 + psi2 @ g))


def graph_preimage(p: CompletionPoint, space: FormSpace) -> np.ndarray:
    """Recover ``g`` from ``Gamma(g)``; raises ChartSingular for points off the group chart."""
    psi1, psi2 = _frames(space)
    coords = np.linalg.solve(np.hstack([psi2, psi1]), p.rep)
    n = space.size
    image, domain = coords[:n], coords[n:]
    if np.linalg.svd(domain, compute_uv=False)[-1] <= GROUP_TOL:
        raise ChartSingular("subspace is not a graph over F_1")
    return image @ np.linalg.inv(domain)


def _f_coordinates(space: FormSpace) -> np.ndarray:
    """Change of basis to ``F_2 + F_1`` (image block first)."""
    psi1, psi2 = _frames(space)
    return np.hstack([psi2, psi1])


def fractional_action(big: np.ndarray, g: np.ndarray, space: FormSpace) -> np.ndarray:
    """``(a g + b)(c g + d)^{-1}`` for the blocks of ``big`` in the splitting ``F_2 + F_1``."""
    g = np.asarray(g)
    if not unitary_and_cone_check(g, space, CheckMode.GROUP):
        raise NotUnitary("g does not preserve beta_F")
    big = np.asarray(big)
    n = space.size
    if big.shape != (2 * n, 2 * n):
        raise SizeMismatch(f"expected a {2 * n} x {2 * n} matrix")
    omega = symplectic_form(n)
    if np.abs(dagger(big) @ omega @ big - omega).max() > GROUP_TOL * max(1.0, float(np.abs(big).max()) ** 2):
        raise NotUnitary("matrix does not preserve Omega")
    change = _f_coordinates(space)
    blocks = np.linalg.solve(change, big @ change)
    a, b, c, d = blocks[:n, :n], blocks[:n, n:], blocks[n:, :n], blocks[n:, n:]
    denominator = c @ g + d
    if np.linalg.svd(denominator, compute_uv=False)[-1] <= GROUP_TOL:
        raise ChartSingular("c g + d is singular")
    result = (a @ g + b) @ np.linalg.inv(denominator)
    return np.real(result) if space.field == "R" else result


def block_diagonal(g1: np.ndarray, g2: np.ndarray, space: FormSpace) -> np.ndarray:
    """The element acting by ``g1`` on ``F_1`` and ``g2`` on ``F_2``, written on ``K^{2r}``."""
    change = _f_coordinates(space)
    result = change @ scipy.linalg.block_diag(g2, g1) @ np.linalg.inv(change)
    return np.real(result) if space.field == "R" else result


def group_cayley(z: JordanElement | np.ndarray, space: FormSpace) -> np.ndarray | None:
    """``(z + J)(z - J)^{-1}``, or ``None`` when ``z - J`` is singular (possible only for indefinite ``J``)."""
    matrix = to_matrix(z) if isinstance(z, JordanElement) else np.asarray(z)
    if matrix.shape != space.J.shape:
        raise SizeMismatch(f"expected a {space.size} x {space.size} matrix")
    difference = matrix - space.J
    if np.linalg.svd(difference, compute_uv=False)[-1] <= GROUP_TOL:
        return None
    result = (matrix + space.J) @ np.linalg.inv(difference)
    return np.real(result) if space.field == "R" else result


def chart_to_group(z: JordanElement, space: FormSpace) -> np.ndarray | None:
    """The group element whose graph is the chart point ``[z; 1]``: ``-J C(z) J^{-1}``."""
    cayley = group_cayley(z, space)
    if cayley is None:
        return None
    return -space.J @ cayley @ np.linalg.inv(space.J)


def euler_eigenspaces(space: FormSpace) -> tuple[CompletionPoint, CompletionPoint]:
    """``(Gamma(1), Gamma(-1))``."""
    eye = np.eye(space.size)
    return graph_embedding(eye, space), graph_embedding(-eye, space)
