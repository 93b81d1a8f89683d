"""Euclidean Jordan algebras and element-level algebra.

Supported families are the spin factors (Minkowski spaces), the real,
complex and quaternionic hermitian matrices, and the direct sum of an
algebra with itself.  Elements are stored as real coordinate vectors in a
fixed natural basis.  Quaternionic matrices are handled through the
embedding of a quaternion ``a + b i + c j + d k`` as the complex 2x2 block
``[[a + b i, -c - d i], [c - d i, a - b i]]``.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Iterable, Sequence

import numpy as np

from .config import tol_algebra
from .errors import AlgebraMismatch, InvalidSize, NumericalFailure, UnsupportedFamily


class Family(str, Enum):
    SPIN = "SpinFactor"
    SYM_R = "SymR"
    HERM_C = "HermC"
    HERM_H = "HermH"
    HERM_O = "HermO"
    DIRECT_SUM = "DirectSum"


# Complex 2x2 images of the quaternion units 1, i, j, k.
QUATERNION_UNITS = (
    np.eye(2, dtype=complex),
    np.array([[1j, 0], [0, -1j]]),
    np.array([[0, -1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [-1j, 0]]),
)


def quaternionic_structure(n: int) -> np.ndarray:
    """Matrix ``Jq`` with ``X Jq = Jq conj(X)`` exactly for quaternionic ``X`` of size ``2n``."""
    return np.kron(np.eye(n), QUATERNION_UNITS[2])


@dataclass(frozen=True, eq=False)
class AlgebraDescriptor:
    """A euclidean Jordan algebra with its natural basis and trace form."""

    family: Family
    size: int
    rank: int
    dim: int
    basis: tuple[np.ndarray, ...] = field(repr=False)
    trace_form: np.ndarray = field(repr=False)
    inner: "AlgebraDescriptor | None" = None

    @property
    def key(self) -> tuple:
        inner_key = self.inner.key if self.inner is not None else None
        return (self.family.value, self.size, inner_key)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, AlgebraDescriptor) and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    @property
    def name(self) -> str:
        if self.family is Family.DIRECT_SUM:
            return f"DirectSum({self.inner.name})"
        return f"{self.family.value}({self.size})"

    @property
    def field(self) -> str | None:
        """Base field tag ``R``, ``C`` or ``H`` of a matrix family, ``None`` otherwise."""
        return {Family.SYM_R: "R", Family.HERM_C: "C", Family.HERM_H: "H"}.get(self.family)

    @property
    def is_matrix_family(self) -> bool:
        return self.field is not None

    @property
    def matrix_size(self) -> int | None:
        """Side length of the (complex) native matrix of an element."""
        if self.family is Family.HERM_H:
            return 2 * self.size
        if self.is_matrix_family:
            return self.size
        return None

    @property
    def simple(self) -> bool:
        if self.family is Family.DIRECT_SUM:
            return False
        if self.family is Family.SPIN:
            return self.size >= 3
        return True

    @property
    def unit(self) -> "JordanElement":
        return unit(self)

    @functools.cached_property
    def _basis_stack(self) -> np.ndarray:
        return np.stack(self.basis)

    @functools.cached_property
    def _structure_constants(self) -> np.ndarray:
        """``C[k, i, j]`` with ``e_i o e_j = sum_k C[k, i, j] e_k``."""
        identity = np.eye(self.dim)
        basis = [JordanElement(self, row) for row in identity]
        constants = np.empty((self.dim, self.dim, self.dim))
        for i, e_i in enumerate(basis):
            for j in range(i, self.dim):
                constants[:, i, j] = constants[:, j, i] = jordan_product(e_i, basis[j]).coords
        return constants

    @functools.cached_property
    def _basis_norms(self) -> np.ndarray:
        stack = self._basis_stack
        return np.real(np.einsum("kij,kij->k", stack.conj(), stack))


@dataclass(frozen=True, eq=False)
class JordanElement:
    """Coordinate vector of an algebra element in the natural basis."""

    algebra: AlgebraDescriptor
    coords: np.ndarray

    def __post_init__(self) -> None:
        coords = np.asarray(self.coords, dtype=float).reshape(-1)
        if coords.shape[0] != self.algebra.dim:
            raise ValueError(
                f"expected {self.algebra.dim} coordinates for {self.algebra.name}, got {coords.shape[0]}"
            )
        object.__setattr__(self, "coords", coords)

    def _check(self, other: "JordanElement") -> None:
        if self.algebra != other.algebra:
            raise AlgebraMismatch(f"{self.algebra.name} vs {other.algebra.name}")

    def __add__(self, other: "JordanElement") -> "JordanElement":
        self._check(other)
        return JordanElement(self.algebra, self.coords + other.coords)

    def __sub__(self, other: "JordanElement") -> "JordanElement":
        self._check(other)
        return JordanElement(self.algebra, self.coords - other.coords)

    def __neg__(self) -> "JordanElement":
        return JordanElement(self.algebra, -self.coords)

    def __mul__(self, scalar: float) -> "JordanElement":
        return JordanElement(self.algebra, float(scalar) * self.coords)

    __rmul__ = __mul__

    def __truediv__(self, scalar: float) -> "JordanElement":
        return JordanElement(self.algebra, self.coords / float(scalar))

    @property
    def matrix(self) -> np.ndarray:
        return to_matrix(self)

    def allclose(self, other: "JordanElement", atol: float | None = None) -> bool:
        self._check(other)
        atol = tol_algebra() if atol is None else atol
        return bool(np.max(np.abs(self.coords - other.coords), initial=0.0) <= atol)


@dataclass(frozen=True)
class Signature:
    p: int
    q: int


@dataclass(frozen=True)
class SpectralData:
    eigenvalues: np.ndarray
    frame: tuple[JordanElement, ...]

    def reconstruct(self) -> JordanElement:
        algebra = self.frame[0].algebra
        coords = sum(lam * c.coords for lam, c in zip(self.eigenvalues, self.frame))
        return JordanElement(algebra, coords)


@dataclass(frozen=True)
class MultiplicationOperators:
    L: np.ndarray
    P: np.ndarray


@dataclass(frozen=True)
class InversionData:
    det: float
    trace: float
    inverse: JordanElement | None
    signature: Signature


@dataclass(frozen=True)
class ConeNormReport:
    in_cone_open: bool | None = None
    in_cone_closed: bool | None = None
    spectral_norm: float | None = None
    in_unit_ball: bool | None = None


@dataclass(frozen=True)
class BergmanResult:
    matrix: np.ndarray
    invertible: bool


# ---------------------------------------------------------------------------
# construction


def _parse_family(family: Family | str) -> Family:
    if isinstance(family, Family):
        return family
    aliases = {f.value.lower(): f for f in Family}
    aliases.update({"spin": Family.SPIN, "minkowski": Family.SPIN, "hermo": Family.HERM_O})
    try:
        return aliases[str(family).lower()]
    except KeyError:
        raise UnsupportedFamily(f"unknown family {family!r}") from None


def _unit_matrix(n: int, i: int, j: int) -> np.ndarray:
    m = np.zeros((n, n))
    m[i, j] = 1.0
    return m


def _matrix_basis(family: Family, r: int) -> list[np.ndarray]:
    basis: list[np.ndarray] = []
    if family is Family.SYM_R:
        basis += [_unit_matrix(r, i, i) for i in range(r)]
        for i in range(r):
            for j in range(i + 1, r):
                basis.append(_unit_matrix(r, i, j) + _unit_matrix(r, j, i))
        return basis
    if family is Family.HERM_C:
        basis += [_unit_matrix(r, i, i).astype(complex) for i in range(r)]
        for i in range(r):
            for j in range(i + 1, r):
                eij, eji = _unit_matrix(r, i, j), _unit_matrix(r, j, i)
                basis.append((eij + eji).astype(complex))
                basis.append(1j * (eij - eji))
        return basis
    # quaternionic: complex 2r x 2r images
    one = QUATERNION_UNITS[0]
    basis += [np.kron(_unit_matrix(r, i, i), one) for i in range(r)]
    for i in range(r):
        for j in range(i + 1, r):
            eij, eji = _unit_matrix(r, i, j), _unit_matrix(r, j, i)
            for unit_q in QUATERNION_UNITS:
                basis.append(np.kron(eij, unit_q) + np.kron(eji, unit_q.conj().T))
    return basis


@functools.lru_cache(maxsize=None)
def _make_simple(family: Family, size: int) -> AlgebraDescriptor:
    if family is Family.SPIN:
        basis = tuple(np.eye(size)[k] for k in range(size))
        return AlgebraDescriptor(family, size, 2, size, basis, 2.0 * np.eye(size))
    basis = tuple(_matrix_basis(family, size))
    dim = len(basis)
    provisional = AlgebraDescriptor(family, size, size, dim, basis, np.eye(dim))
    gram = np.empty((dim, dim))
    for a in range(dim):
        for b in range(dim):
            gram[a, b] = _matrix_trace(provisional, 0.5 * (basis[a] @ basis[b] + basis[b] @ basis[a]))
    return AlgebraDescriptor(family, size, size, dim, basis, gram)


def make_algebra(family: Family | str, size: int, inner: AlgebraDescriptor | None = None) -> AlgebraDescriptor:
    """Construct an algebra descriptor.

    ``size`` is ``d`` for the spin factor and the matrix size ``r`` otherwise.
    For ``DirectSum`` either pass ``inner`` or a family string of the form
    ``"DirectSum:SymR"``.
    """
    if isinstance(family, str) and ":" in family:
        outer, inner_name = family.split(":", 1)
        if _parse_family(outer) is not Family.DIRECT_SUM:
            raise UnsupportedFamily(f"unknown family {family!r}")
        return direct_sum(make_algebra(inner_name, size))
    fam = _parse_family(family)
    if fam is Family.HERM_O:
        raise UnsupportedFamily("the exceptional algebra Herm_3(O) is not supported")
    if fam is Family.DIRECT_SUM:
        if inner is None:
            raise UnsupportedFamily("DirectSum requires an inner algebra")
        return direct_sum(inner)
    size = int(size)
    if size <= 0:
        raise InvalidSize(f"size must be positive, got {size}")
    if fam is Family.SPIN and size < 2:
        raise InvalidSize("the spin factor requires d >= 2")
    return _make_simple(fam, size)


@functools.lru_cache(maxsize=None)
def direct_sum(inner: AlgebraDescriptor) -> AlgebraDescriptor:
    """The product algebra ``inner x inner`` with concatenated coordinates."""
    if inner.family is Family.DIRECT_SUM:
        raise UnsupportedFamily("nested direct sums are not supported")
    n = inner.dim
    basis = tuple(np.eye(2 * n)[k] for k in range(2 * n))
    gram = np.zeros((2 * n, 2 * n))
    gram[:n, :n] = inner.trace_form
    gram[n:, n:] = inner.trace_form
    return AlgebraDescriptor(Family.DIRECT_SUM, inner.size, 2 * inner.rank, 2 * n, basis, gram, inner)


def algebra_from_key(family: str, size: int) -> AlgebraDescriptor:
    return make_algebra(family, size)


def family_label(algebra: AlgebraDescriptor) -> str:
    if algebra.family is Family.DIRECT_SUM:
        return f"DirectSum:{algebra.inner.family.value}"
    return algebra.family.value


# ---------------------------------------------------------------------------
# elements and conversions


def element(algebra: AlgebraDescriptor, coords: Iterable[float]) -> JordanElement:
    return JordanElement(algebra, np.asarray(list(coords) if not isinstance(coords, np.ndarray) else coords, dtype=float))


def zero(algebra: AlgebraDescriptor) -> JordanElement:
    return JordanElement(algebra, np.zeros(algebra.dim))


def unit(algebra: AlgebraDescriptor) -> JordanElement:
    if algebra.family is Family.SPIN:
        coords = np.zeros(algebra.dim)
        coords[0] = 1.0
        return JordanElement(algebra, coords)
    if algebra.family is Family.DIRECT_SUM:
        inner = unit(algebra.inner).coords
        return JordanElement(algebra, np.concatenate([inner, inner]))
    coords = np.zeros(algebra.dim)
    coords[: algebra.size] = 1.0
    return JordanElement(algebra, coords)


def check_element(x: JordanElement, algebra: AlgebraDescriptor | None = None) -> JordanElement:
    """Validate that ``x`` is a finite element, optionally of a given algebra."""
    if not isinstance(x, JordanElement):
        raise TypeError(f"expected a JordanElement, got {type(x).__name__}")
    if algebra is not None and x.algebra != algebra:
        raise AlgebraMismatch(f"{x.algebra.name} vs {algebra.name}")
    if not np.all(np.isfinite(x.coords)):
        raise ValueError("element has non-finite coordinates")
    return x


def check_same_algebra(*elements: JordanElement) -> AlgebraDescriptor:
    algebra = elements[0].algebra
    for x in elements:
        check_element(x, algebra)
    return algebra


def to_matrix(x: JordanElement) -> np.ndarray:
    """Native matrix of a matrix-family element (complex 2r x 2r for quaternions)."""
    algebra = x.algebra
    if not algebra.is_matrix_family:
        raise UnsupportedFamily(f"{algebra.name} has no matrix representation")
    return np.tensordot(x.coords, algebra._basis_stack, axes=1)


def from_matrix(algebra: AlgebraDescriptor, matrix: np.ndarray) -> JordanElement:
    """Coordinates of a hermitian matrix in the natural (Frobenius-orthogonal) basis."""
    if not algebra.is_matrix_family:
        raise UnsupportedFamily(f"{algebra.name} has no matrix representation")
    stack = algebra._basis_stack
    coords = np.real(np.einsum("kij,ij->k", stack.conj(), matrix)) / algebra._basis_norms
    return JordanElement(algebra, coords)


def _matrix_trace(algebra: AlgebraDescriptor, matrix: np.ndarray) -> float:
    t = float(np.real(np.trace(matrix)))
    return t / 2.0 if algebra.family is Family.HERM_H else t


def split_direct_sum(x: JordanElement) -> tuple[JordanElement, JordanElement]:
    inner = x.algebra.inner
    n = inner.dim
    return JordanElement(inner, x.coords[:n]), JordanElement(inner, x.coords[n:])


def join_direct_sum(a: JordanElement, b: JordanElement) -> JordanElement:
    check_same_algebra(a, b)
    return JordanElement(direct_sum(a.algebra), np.concatenate([a.coords, b.coords]))


def minkowski_form(x: JordanElement, y: JordanElement | None = None) -> float:
    """The Lorentzian form ``x0 y0 - <x_vec, y_vec>`` of a spin factor."""
    y = x if y is None else y
    return float(x.coords[0] * y.coords[0] - x.coords[1:] @ y.coords[1:])


# ---------------------------------------------------------------------------
# product, trace, operators


def jordan_product(a: JordanElement, b: JordanElement) -> JordanElement:
    algebra = check_same_algebra(a, b)
    if algebra.family is Family.SPIN:
        x, y = a.coords, b.coords
        out = np.empty_like(x)
        out[0] = x @ y
        out[1:] = x[0] * y[1:] + y[0] * x[1:]
        return JordanElement(algebra, out)
    if algebra.family is Family.DIRECT_SUM:
        a1, a2 = split_direct_sum(a)
        b1, b2 = split_direct_sum(b)
        return join_direct_sum(jordan_product(a1, b1), jordan_product(a2, b2))
    ma, mb = to_matrix(a), to_matrix(b)
    return from_matrix(algebra, 0.5 * (ma @ mb + mb @ ma))


def square(x: JordanElement) -> JordanElement:
    return jordan_product(x, x)


def jordan_trace(x: JordanElement) -> float:
    algebra = x.algebra
    if algebra.family is Family.SPIN:
        return 2.0 * float(x.coords[0])
    if algebra.family is Family.DIRECT_SUM:
        a, b = split_direct_sum(x)
        return jordan_trace(a) + jordan_trace(b)
    return _matrix_trace(algebra, to_matrix(x))


def trace_inner(x: JordanElement, y: JordanElement) -> float:
    """The trace form ``tr(x o y)``."""
    algebra = check_same_algebra(x, y)
    return float(x.coords @ algebra.trace_form @ y.coords)


def multiplication_operators(a: JordanElement) -> MultiplicationOperators:
    """Matrices of ``L(a): y -> a o y`` and the quadratic representation ``P(a) = 2 L(a)^2 - L(a o a)``."""
    constants = a.algebra._structure_constants
    L = np.tensordot(constants, a.coords, axes=([1], [0]))
    La2 = np.tensordot(constants, square(a).coords, axes=([1], [0]))
    P = 2.0 * L @ L - La2
    return MultiplicationOperators(L, P)


# ---------------------------------------------------------------------------
# spectral theory


def _sorted(eigenvalues: Sequence[float], frame: Sequence[JordanElement]) -> SpectralData:
    order = np.argsort(-np.asarray(eigenvalues), kind="stable")
    return SpectralData(np.asarray(eigenvalues, dtype=float)[order], tuple(frame[i] for i in order))


def _spin_spectral(x: JordanElement) -> SpectralData:
    algebra = x.algebra
    x0, vec = x.coords[0], x.coords[1:]
    radius = float(np.linalg.norm(vec))
    if radius == 0.0:
        direction = np.zeros_like(vec)
        direction[0] = 1.0
    else:
        direction = vec / radius
    c_plus = JordanElement(algebra, 0.5 * np.concatenate([[1.0], direction]))
    c_minus = JordanElement(algebra, 0.5 * np.concatenate([[1.0], -direction]))
    return SpectralData(np.array([x0 + radius, x0 - radius]), (c_plus, c_minus))


def _quaternionic_frame(matrix: np.ndarray, r: int) -> tuple[list[float], list[np.ndarray]]:
    """Collapse the doubled spectrum of a quaternionic hermitian matrix into quaternionic lines."""
    try:
        values, vectors = np.linalg.eigh(matrix)
    except np.linalg.LinAlgError as exc:
        raise NumericalFailure(str(exc)) from exc
    jq = quaternionic_structure(r)
    scale = max(1.0, float(np.max(np.abs(values))))
    order = np.argsort(-values)
    values, vectors = values[order], vectors[:, order]
    clusters: list[list[int]] = [[0]]
    for k in range(1, len(values)):
        if values[clusters[-1][-1]] - values[k] <= 1e-8 * scale:
            clusters[-1].append(k)
        else:
            clusters.append([k])
    basis = np.zeros((2 * r, 0), dtype=complex)
    eigenvalues: list[float] = []
    projectors: list[np.ndarray] = []
    for cluster in clusters:
        if len(cluster) % 2:
            raise NumericalFailure("quaternionic eigenvalues are not paired")
        space = vectors[:, cluster]
        for _ in range(len(cluster) // 2):
            residual = space - basis @ (basis.conj().T @ space)
            pick = int(np.argmax(np.linalg.norm(residual, axis=0)))
            q1 = residual[:, pick]
            q1 = q1 / np.linalg.norm(q1)
            q2 = jq @ q1.conj()
            pair = np.stack([q1, q2], axis=1)
            basis = np.concatenate([basis, pair], axis=1)
            eigenvalues.append(float(np.real(q1.conj() @ matrix @ q1)))
            projectors.append(pair @ pair.conj().T)
    return eigenvalues, projectors


def spectral_decompose(x: JordanElement) -> SpectralData:
    """Eigenvalues (nonincreasing) and a Jordan frame of ``x``."""
    check_element(x)
    algebra = x.algebra
    if algebra.family is Family.SPIN:
        return _spin_spectral(x)
    if algebra.family is Family.DIRECT_SUM:
        a, b = split_direct_sum(x)
        sa, sb = spectral_decompose(a), spectral_decompose(b)
        za = zero(algebra.inner)
        frame = [join_direct_sum(c, za) for c in sa.frame] + [join_direct_sum(za, c) for c in sb.frame]
        return _sorted(np.concatenate([sa.eigenvalues, sb.eigenvalues]), frame)
    matrix = to_matrix(x)
    matrix = 0.5 * (matrix + matrix.conj().T)
    if algebra.family is Family.HERM_H:
        values, projectors = _quaternionic_frame(matrix, algebra.size)
    else:
        try:
            w, vecs = np.linalg.eigh(matrix)
        except np.linalg.LinAlgError as exc:
            raise NumericalFailure(str(exc)) from exc
        values = list(w)
        projectors = [np.outer(vecs[:, k], vecs[:, k].conj()) for k in range(len(w))]
    frame = [from_matrix(algebra, p) for p in projectors]
    return _sorted(values, frame)


def spectral_apply(x: JordanElement, func: Callable[[np.ndarray], np.ndarray]) -> JordanElement:
    """Functional calculus ``sum f(lambda_i) c_i``."""
    data = spectral_decompose(x)
    values = func(data.eigenvalues)
    coords = sum(v * c.coords for v, c in zip(values, data.frame))
    return JordanElement(x.algebra, np.asarray(coords, dtype=float))


def eigenvalues(x: JordanElement) -> np.ndarray:
    return spectral_decompose(x).eigenvalues


def invert_and_signature(x: JordanElement, tol: float | None = None) -> InversionData:
    tol = tol_algebra() if tol is None else tol
    data = spectral_decompose(x)
    lam = data.eigenvalues
    invertible = bool(np.all(np.abs(lam) > tol))
    inverse = None
    if invertible:
        coords = sum(c.coords / value for value, c in zip(lam, data.frame))
        inverse = JordanElement(x.algebra, coords)
    signature = Signature(int(np.sum(lam > tol)), int(np.sum(lam < -tol)))
    return InversionData(float(np.prod(lam)), float(np.sum(lam)), inverse, signature)


def inverse(x: JordanElement, tol: float | None = None) -> JordanElement | None:
    return invert_and_signature(x, tol).inverse


def cone_and_norm(x: JordanElement, queries: Iterable[str] | None = None, tol: float | None = None) -> ConeNormReport:
    """Cone membership and spectral-norm queries.

    ``queries`` restricts the report to a subset of ``in_cone_open``,
    ``in_cone_closed``, ``spectral_norm`` and ``in_unit_ball``.
    """
    tol = tol_algebra() if tol is None else tol
    lam = spectral_decompose(x).eigenvalues
    norm = float(np.max(np.abs(lam)))
    full = {
        "in_cone_open": bool(lam.min() > tol),
        "in_cone_closed": bool(lam.min() >= -tol),
        "spectral_norm": norm,
        "in_unit_ball": bool(norm < 1.0 - tol),
    }
    if queries is not None:
        wanted = set(queries)
        unknown = wanted - set(full)
        if unknown:
            raise ValueError(f"unknown queries {sorted(unknown)}")
        full = {k: (v if k in wanted else None) for k, v in full.items()}
    return ConeNormReport(**full)


def in_open_cone(x: JordanElement, tol: float | None = None) -> bool:
    return bool(cone_and_norm(x, ["in_cone_open"], tol).in_cone_open)


def double_cone_membership(a: JordanElement, b: JordanElement, x: JordanElement) -> bool:
    """``x`` lies in the double cone ``(a - V+) cap (b + V+)``."""
    check_same_algebra(a, b, x)
    return in_open_cone(a - x) and in_open_cone(x - b)


def bergman_operator(x: JordanElement, y: JordanElement, tol: float | None = None) -> BergmanResult:
    """``B(x, y) = Id - 2 (L(x o y) + [L(x), L(y)]) + P(x) P(y)``."""
    algebra = check_same_algebra(x, y)
    tol = tol_algebra() if tol is None else tol
    ops_x, ops_y = multiplication_operators(x), multiplication_operators(y)
    L_xy = multiplication_operators(jordan_product(x, y)).L
    commutator = ops_x.L @ ops_y.L - ops_y.L @ ops_x.L
    matrix = np.eye(algebra.dim) - 2.0 * (L_xy + commutator) + ops_x.P @ ops_y.P
    # the determinant shrinks geometrically with the dimension, so test the smallest singular value
    singular = np.linalg.svd(matrix, compute_uv=False)
    return BergmanResult(matrix, bool(singular[-1] > tol * max(1.0, singular[0])))


# ---------------------------------------------------------------------------
# sampling helpers


def random_element(algebra: AlgebraDescriptor, rng: np.random.Generator, scale: float = 1.0) -> JordanElement:
    return JordanElement(algebra, scale * rng.standard_normal(algebra.dim))


def random_with_spectrum(algebra: AlgebraDescriptor, rng: np.random.Generator, values: Sequence[float]) -> JordanElement:
    """An element with prescribed eigenvalues on the frame of a random element."""
    values = np.asarray(values, dtype=float)
    if values.shape != (algebra.rank,):
        raise ValueError(f"need {algebra.rank} eigenvalues")
    frame = spectral_decompose(random_element(algebra, rng)).frame
    coords = sum(v * c.coords for v, c in zip(values, frame))
    return JordanElement(algebra, coords)


def random_positive(algebra: AlgebraDescriptor, rng: np.random.Generator, low: float = 0.1, high: float = 3.0) -> JordanElement:
    return random_with_spectrum(algebra, rng, rng.uniform(low, high, algebra.rank))


def random_unit_ball(algebra: AlgebraDescriptor, rng: np.random.Generator, radius: float = 0.99) -> JordanElement:
    return random_with_spectrum(algebra, rng, rng.uniform(-radius, radius, algebra.rank))


def standard_frame(algebra: AlgebraDescriptor) -> tuple[JordanElement, ...]:
    """The diagonal frame ``E_ii`` (matrix families) or the lightlike frame ``(e0 +- e1)/2`` (spin)."""
    if algebra.family is Family.SPIN:
        c1 = np.zeros(algebra.dim)
        c1[0], c1[1] = 0.5, 0.5
        c2 = c1.copy()
        c2[1] = -0.5
        return (JordanElement(algebra, c1), JordanElement(algebra, c2))
    if algebra.family is Family.DIRECT_SUM:
        inner = standard_frame(algebra.inner)
        z = zero(algebra.inner)
        return tuple(join_direct_sum(c, z) for c in inner) + tuple(join_direct_sum(z, c) for c in inner)
    return tuple(JordanElement(algebra, np.eye(algebra.dim)[k]) for k in range(algebra.size))


def signed_frame_sum(algebra: AlgebraDescriptor, j: int) -> JordanElement:
    """``c^j = c_1 + ... + c_{r-j} - c_{r-j+1} - ... - c_r`` for the standard frame."""
    frame = standard_frame(algebra)
    r = algebra.rank
    coords = sum((1.0 if i < r - j else -1.0) * c.coords for i, c in enumerate(frame))
    return JordanElement(algebra, coords)


# ---------------------------------------------------------------------------
# serialization


def element_to_json(x: JordanElement) -> dict:
    return {"algebra": {"family": family_label(x.algebra), "size": x.algebra.size}, "coords": x.coords.tolist()}


def element_from_json(data: dict) -> JordanElement:
    algebra = make_algebra(data["algebra"]["family"], int(data["algebra"]["size"]))
    return JordanElement(algebra, np.asarray(data["coords"], dtype=float))
