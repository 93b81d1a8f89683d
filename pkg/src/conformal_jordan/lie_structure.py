"""Matrix models of conformal Lie algebras, Euler elements and gradings.

Matrix families ``Sym_r(R)``, ``Herm_r(C)`` and ``Herm_r(H)`` use the
algebra ``u(Omega, K^{2r})`` of matrices ``x`` with ``x* Omega + Omega x = 0``,
``Omega = [[0, 1], [-1, 0]]``, where a Jordan element ``v`` sits in the
upper right block.  Quaternionic matrices use the complex ``4r x 4r``
embedding.  The spin factor of dimension ``d`` uses ``so_{2,d}`` with the
form ``diag(1, 1, -1, ..., -1)``; coordinate ``v_0`` sits on ``e_2`` and the
spatial part on ``e_3 .. e_{d+1}``.

Matrices are kept as numpy arrays (real or complex); ``LieMatrix`` wraps an
array together with its model at the public boundaries and serializes it
in realified form.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable

import numpy as np
import scipy.linalg

from .config import tol_algebra, tol_exp
from .errors import (
    IndexOutOfRange,
    NonGroupMatrix,
    NotEulerElement,
    NotNormalizing,
    NumericalFailure,
    UnsupportedFamily,
)
from .jordan_core import (
    AlgebraDescriptor,
    Family,
    JordanElement,
    from_matrix,
    in_open_cone,
    join_direct_sum,
    multiplication_operators,
    quaternionic_structure,
    signed_frame_sum,
    spectral_decompose,
    split_direct_sum,
    standard_frame,
    to_matrix,
)


def symplectic_form(n: int) -> np.ndarray:
    """``[[0, 1_n], [-1_n, 0]]``."""
    eye, zeros = np.eye(n), np.zeros((n, n))
    return np.block([[zeros, eye], [-eye, zeros]])


def realify(matrix: np.ndarray) -> np.ndarray:
    """Real ``2n x 2n`` image ``[[Re, -Im], [Im, Re]]`` of a complex matrix; real input is returned unchanged."""
    if not np.iscomplexobj(matrix):
        return np.asarray(matrix, dtype=float)
    re, im = matrix.real, matrix.imag
    return np.block([[re, -im], [im, re]])


def unrealify(matrix: np.ndarray, complex_model: bool) -> np.ndarray:
    matrix = np.asarray(matrix, dtype=float)
    if not complex_model:
        return matrix
    n = matrix.shape[0] // 2
    return matrix[:n, :n] + 1j * matrix[n:, :n]


def dagger(x: np.ndarray) -> np.ndarray:
    return x.conj().T


@dataclass(frozen=True, eq=False)
class LieModel:
    """Matrix model of the conformal Lie algebra of a Jordan algebra."""

    algebra: AlgebraDescriptor
    kind: str
    field: str
    matrix_size: int
    form: np.ndarray = field(repr=False)
    basis: np.ndarray = field(repr=False)
    h: np.ndarray = field(repr=False)
    tau_h_matrix: np.ndarray = field(repr=False)
    inner: "LieModel | None" = field(default=None, repr=False)

    @property
    def dim(self) -> int:
        return int(self.basis.shape[0])

    @property
    def is_complex(self) -> bool:
        return self.field in ("C", "H")

    @property
    def dtype(self) -> type:
        return complex if self.is_complex else float

    # linear structure ---------------------------------------------------

    def coords(self, x: np.ndarray, basis: np.ndarray | None = None) -> np.ndarray:
        basis = self.basis if basis is None else basis
        return np.real(np.einsum("kij,ij->k", basis.conj(), x))

    def from_coords(self, c: np.ndarray, basis: np.ndarray | None = None) -> np.ndarray:
        basis = self.basis if basis is None else basis
        return np.tensordot(np.asarray(c, dtype=float), basis, axes=1)

    def membership_residual(self, x: np.ndarray) -> float:
        """Size of the violation of the defining linear conditions."""
        if self.kind == "DirectSum":
            m = self.inner.matrix_size
            off = max(np.abs(x[:m, m:]).max(), np.abs(x[m:, :m]).max())
            return max(off, self.inner.membership_residual(x[:m, :m]), self.inner.membership_residual(x[m:, m:]))
        res = dagger(x) @ self.form + self.form @ x
        value = float(np.abs(res).max())
        if self.field == "H":
            jq = quaternionic_structure(self.matrix_size // 2)
            value = max(value, float(np.abs(x @ jq - jq @ x.conj()).max()))
        if not self.is_complex:
            value = max(value, float(np.abs(np.imag(x)).max()) if np.iscomplexobj(x) else 0.0)
        return value

    def contains(self, x: np.ndarray, tol: float | None = None) -> bool:
        tol = tol_algebra() if tol is None else tol
        return self.membership_residual(np.asarray(x)) <= tol * max(1.0, float(np.abs(x).max()))

    def group_residual(self, g: np.ndarray) -> float:
        if self.kind == "DirectSum":
            m = self.inner.matrix_size
            off = max(np.abs(g[:m, m:]).max(), np.abs(g[m:, :m]).max())
            return max(off, self.inner.group_residual(g[:m, :m]), self.inner.group_residual(g[m:, m:]))
        value = float(np.abs(dagger(g) @ self.form @ g - self.form).max())
        if self.field == "H":
            jq = quaternionic_structure(self.matrix_size // 2)
            value = max(value, float(np.abs(g @ jq - jq @ g.conj()).max()))
        return value

    def is_group(self, g: np.ndarray, tol: float = 1e-7) -> bool:
        return self.group_residual(np.asarray(g)) <= tol * max(1.0, float(np.abs(g).max()) ** 2)

    @staticmethod
    def bracket(a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return a @ b - b @ a

    @staticmethod
    def theta(x: np.ndarray) -> np.ndarray:
        """Cartan involution ``x -> -x*``."""
        return -dagger(x)

    def tau_h(self, x: np.ndarray) -> np.ndarray:
        t = self.tau_h_matrix
        return t @ x @ np.linalg.inv(t)

    def exp(self, x: np.ndarray) -> np.ndarray:
        return scipy.linalg.expm(x)

    def ad_matrix(self, x: np.ndarray, basis: np.ndarray | None = None) -> np.ndarray:
        """Real matrix of ``ad x`` in the orthonormal basis (``ad x`` must preserve its span)."""
        basis = self.basis if basis is None else basis
        brackets = np.einsum("ij,kjl->kil", x, basis) - np.einsum("kij,jl->kil", basis, x)
        return np.real(np.einsum("aij,kij->ak", basis.conj(), brackets))

    # Jordan algebra interface -------------------------------------------

    def translation(self, v: JordanElement) -> np.ndarray:
        """The generator ``X_v`` of ``g_1(h)`` corresponding to ``v``."""
        if v.algebra != self.algebra:
            raise UnsupportedFamily(f"{v.algebra.name} does not belong to {self.algebra.name}")
        if self.kind == "DirectSum":
            a, b = split_direct_sum(v)
            return scipy.linalg.block_diag(self.inner.translation(a), self.inner.translation(b))
        if self.kind == "SO2d":
            d = self.algebra.size
            x = np.zeros((d + 2, d + 2))
            lowered = v.coords.copy()
            lowered[1:] *= -1.0
            x[1 : d + 1, 0] = v.coords
            x[1 : d + 1, d + 1] = -v.coords
            x[0, 1 : d + 1] = -lowered
            x[d + 1, 1 : d + 1] = -lowered
            return x
        block = to_matrix(v)
        n = block.shape[0]
        x = np.zeros((2 * n, 2 * n), dtype=self.dtype)
        x[:n, n:] = block if self.is_complex else np.real(block)
        return x

    def g1_to_element(self, x: np.ndarray) -> JordanElement:
        """Inverse of :meth:`translation` on ``g_1(h)``."""
        if self.kind == "DirectSum":
            m = self.inner.matrix_size
            return join_direct_sum(self.inner.g1_to_element(x[:m, :m]), self.inner.g1_to_element(x[m:, m:]))
        if self.kind == "SO2d":
            d = self.algebra.size
            return JordanElement(self.algebra, np.real(x[1 : d + 1, 0]))
        n = self.matrix_size // 2
        return from_matrix(self.algebra, x[:n, n:])

    @functools.cached_property
    def derived_basis(self) -> np.ndarray:
        """Orthonormal basis of the semisimple part (drops the centre ``i 1`` of ``u_{r,r}``)."""
        if self.kind == "DirectSum":
            inner = self.inner.derived_basis
            m = self.inner.matrix_size
            zeros = np.zeros((m, m), dtype=inner.dtype)
            blocks = [np.block([[b, zeros], [zeros, zeros]]) for b in inner]
            blocks += [np.block([[zeros, zeros], [zeros, b]]) for b in inner]
            return np.stack(blocks)
        if self.field != "C":
            return self.basis
        traces = np.array([[np.trace(b).real, np.trace(b).imag] for b in self.basis]).T
        kernel = scipy.linalg.null_space(traces, rcond=1e-10)
        return np.tensordot(kernel.T, self.basis, axes=1)


@dataclass(frozen=True, eq=False)
class LieMatrix:
    """An element of a Lie model (algebra element or, if flagged, group element)."""

    model: LieModel
    mat: np.ndarray
    group: bool = False

    def to_json(self) -> dict:
        return {
            "model": {"kind": self.model.kind, "size": self.model.matrix_size, "field": self.model.field},
            "mat": realify(self.mat).tolist(),
            "group": self.group,
        }


def as_array(x: "LieMatrix | np.ndarray") -> np.ndarray:
    return x.mat if isinstance(x, LieMatrix) else np.asarray(x)


def lie_matrix_from_json(data: dict, model: LieModel) -> LieMatrix:
    mat = unrealify(np.asarray(data["mat"]), model.is_complex)
    return LieMatrix(model, mat, bool(data.get("group", False)))


# ---------------------------------------------------------------------------
# model construction


def _null_space_basis(size: int, complex_entries: bool, residual: Callable[[np.ndarray], np.ndarray]) -> np.ndarray:
    """Frobenius-orthonormal basis of the real solution space of a real-linear matrix condition."""
    n_params = size * size * (2 if complex_entries else 1)
    columns = []
    for p in range(n_params):
        vec = np.zeros(n_params)
        vec[p] = 1.0
        x = _params_to_matrix(vec, size, complex_entries)
        r = residual(x)
        columns.append(np.concatenate([np.real(r).ravel(), np.imag(r).ravel()]))
    system = np.stack(columns, axis=1)
    kernel = scipy.linalg.null_space(system, rcond=1e-10)
    return np.stack([_params_to_matrix(kernel[:, k], size, complex_entries) for k in range(kernel.shape[1])])


def _params_to_matrix(vec: np.ndarray, size: int, complex_entries: bool) -> np.ndarray:
    if complex_entries:
        half = size * size
        return (vec[:half] + 1j * vec[half:]).reshape(size, size)
    return vec.reshape(size, size)


@functools.lru_cache(maxsize=None)
def matrix_model(algebra: AlgebraDescriptor) -> LieModel:
    """Build and verify the matrix model of ``co(V)`` for ``algebra``."""
    fam = algebra.family
    if fam is Family.DIRECT_SUM:
        inner = matrix_model(algebra.inner)
        m = inner.matrix_size
        zeros = np.zeros((m, m), dtype=inner.dtype)
        blocks = [np.block([[b, zeros], [zeros, zeros]]) for b in inner.basis]
        blocks += [np.block([[zeros, zeros], [zeros, b]]) for b in inner.basis]
        return LieModel(
            algebra,
            "DirectSum",
            inner.field,
            2 * m,
            scipy.linalg.block_diag(inner.form, inner.form),
            np.stack(blocks),
            scipy.linalg.block_diag(inner.h, inner.h),
            scipy.linalg.block_diag(inner.tau_h_matrix, inner.tau_h_matrix),
            inner,
        )
    if fam is Family.SPIN:
        d = algebra.size
        form = np.diag([1.0, 1.0] + [-1.0] * d)
        basis = _null_space_basis(d + 2, False, lambda x: x.T @ form + form @ x)
        h = np.zeros((d + 2, d + 2))
        h[0, d + 1] = h[d + 1, 0] = 1.0
        tau = np.diag([-1.0] + [1.0] * d + [-1.0])
        model = LieModel(algebra, "SO2d", "R", d + 2, form, basis, h, tau)
        expected = (d + 2) * (d + 1) // 2
    elif fam in (Family.SYM_R, Family.HERM_C, Family.HERM_H):
        r = algebra.size
        fld = algebra.field
        n = 2 * r if fld == "H" else r
        form = symplectic_form(n)
        if fld == "R":
            basis = _null_space_basis(2 * n, False, lambda x: x.T @ form + form @ x)
        elif fld == "C":
            basis = _null_space_basis(2 * n, True, lambda x: dagger(x) @ form + form @ x)
        else:
            jq = quaternionic_structure(n)

            def residual(x: np.ndarray) -> np.ndarray:
                return np.concatenate([(dagger(x) @ form + form @ x).ravel(), (x @ jq - jq @ x.conj()).ravel()])

            basis = _null_space_basis(2 * n, True, residual)
        h = 0.5 * np.diag([1.0] * n + [-1.0] * n).astype(complex if fld != "R" else float)
        tau = np.diag([1.0] * n + [-1.0] * n).astype(h.dtype)
        model = LieModel(algebra, "UOmega", fld, 2 * n, form, basis, h, tau)
        expected = {"R": r * (2 * r + 1), "C": 4 * r * r, "H": 2 * r * (4 * r - 1)}[fld]
    else:
        raise UnsupportedFamily(f"no matrix model for {algebra.name}")
    if model.dim != expected:
        raise NumericalFailure(f"model of {algebra.name} has dimension {model.dim}, expected {expected}")
    return model


def expected_model_dim(algebra: AlgebraDescriptor) -> int:
    """Closed-form dimension of the model (``sp_{2r}``, ``u_{r,r}``, ``so*(4r)``, ``so_{2,d}``)."""
    r = algebra.size
    formulas = {
        Family.SPIN: (r + 2) * (r + 1) // 2,
        Family.SYM_R: r * (2 * r + 1),
        Family.HERM_C: 4 * r * r,
        Family.HERM_H: 2 * r * (4 * r - 1),
    }
    if algebra.family is Family.DIRECT_SUM:
        return 2 * expected_model_dim(algebra.inner)
    return formulas[algebra.family]


# ---------------------------------------------------------------------------
# Euler elements


@dataclass(frozen=True, eq=False)
class EulerElements:
    """Euler element ``h``, the sl2 data ``e, f``, ``z_k``, ``k`` and the Pierce family ``h^j, k^j``."""

    model: LieModel
    h: LieMatrix
    e: LieMatrix
    f: LieMatrix
    zk: LieMatrix
    k: LieMatrix
    frame: tuple[JordanElement, ...]

    @property
    def rank(self) -> int:
        return len(self.frame)

    def _check(self, j: int) -> None:
        if not 0 <= j <= self.rank:
            raise IndexOutOfRange(f"j must lie in [0, {self.rank}], got {j}")

    def frame_h(self, i: int) -> np.ndarray:
        x = self.model.translation(self.frame[i])
        return LieModel.bracket(x, -0.5 * LieModel.theta(x))

    def frame_zk(self, i: int) -> np.ndarray:
        x = self.model.translation(self.frame[i])
        return 0.5 * (x + LieModel.theta(x))

    def _signed(self, j: int, part: Callable[[int], np.ndarray]) -> np.ndarray:
        self._check(j)
        r = self.rank
        return sum((1.0 if i < r - j else -1.0) * part(i) for i in range(r))

    def hj(self, j: int) -> LieMatrix:
        return LieMatrix(self.model, self._signed(j, self.frame_h))

    def zkj(self, j: int) -> LieMatrix:
        return LieMatrix(self.model, self._signed(j, self.frame_zk))

    def kj(self, j: int) -> LieMatrix:
        rot = self.model.exp(-0.5 * np.pi * self.zkj(j).mat)
        return LieMatrix(self.model, rot @ self.h.mat @ np.linalg.inv(rot))

    def dj(self, j: int) -> LieMatrix:
        """Partial Cayley transform ``exp(pi/2 z_k^j)`` as a group element."""
        return LieMatrix(self.model, self.model.exp(0.5 * np.pi * self.zkj(j).mat), group=True)


@functools.lru_cache(maxsize=None)
def euler_elements(model: LieModel) -> EulerElements:
    algebra = model.algebra
    e = model.translation(algebra.unit)
    f = -0.5 * LieModel.theta(e)
    zk = 0.5 * (e + LieModel.theta(e))
    rot = model.exp(-0.5 * np.pi * zk)
    k = rot @ model.h @ np.linalg.inv(rot)
    wrap = functools.partial(LieMatrix, model)
    return EulerElements(model, wrap(model.h), wrap(e), wrap(f), wrap(zk), wrap(k), standard_frame(algebra))


def jordan_product_via_brackets(model: LieModel, x: JordanElement, y: JordanElement) -> JordanElement:
    """``[[X_x, f], X_y]`` read back in ``V``."""
    f = euler_elements(model).f.mat
    inner = LieModel.bracket(LieModel.bracket(model.translation(x), f), model.translation(y))
    return model.g1_to_element(inner)


# ---------------------------------------------------------------------------
# gradings


@dataclass(frozen=True, eq=False)
class Grading:
    """Projections onto ``g_{-1}, g_0, g_1`` as matrices on model coordinates."""

    h: LieMatrix
    minus: np.ndarray
    zero: np.ndarray
    plus: np.ndarray

    def dims(self) -> tuple[int, int, int]:
        return tuple(int(round(np.trace(p))) for p in (self.minus, self.zero, self.plus))


def _euler_spectrum_ok(ad: np.ndarray, tol: float) -> bool:
    lam = np.linalg.eigvals(ad)
    near = np.min(np.abs(lam[:, None] - np.array([-1.0, 0.0, 1.0])[None, :]), axis=1)
    if np.any(near > tol):
        return False
    # diagonalizable with eigenvalues in {-1, 0, 1}  <=>  ad (ad - 1)(ad + 1) = 0
    eye = np.eye(ad.shape[0])
    return bool(np.abs(ad @ (ad - eye) @ (ad + eye)).max() <= tol * max(1.0, np.abs(ad).max()) ** 3)


def is_euler(model: LieModel, x: "LieMatrix | np.ndarray", tol: float = 1e-7) -> bool:
    x = as_array(x)
    if np.abs(x).max() <= tol:
        return False
    return _euler_spectrum_ok(model.ad_matrix(x), tol)


def grading(model: LieModel, h: "LieMatrix | np.ndarray", tol: float = 1e-7) -> Grading:
    harr = as_array(h)
    ad = model.ad_matrix(harr)
    if not _euler_spectrum_ok(ad, tol):
        raise NotEulerElement("ad h is not diagonalizable with spectrum in {-1, 0, 1}")
    eye = np.eye(ad.shape[0])
    plus = 0.5 * ad @ (ad + eye)
    minus = 0.5 * ad @ (ad - eye)
    zero = eye - ad @ ad
    return Grading(LieMatrix(model, harr), minus, zero, plus)


def grade_project(
    x: "LieMatrix | np.ndarray", h: "LieMatrix | np.ndarray", model: LieModel | None = None
) -> tuple[LieMatrix, LieMatrix, LieMatrix]:
    """Components ``(x_{-1}, x_0, x_1)`` of ``x`` in the 3-grading defined by ``h``."""
    model = model or (x.model if isinstance(x, LieMatrix) else h.model)
    harr, xarr = as_array(h), as_array(x)
    grading(model, harr)

    def ad(y: np.ndarray) -> np.ndarray:
        return LieModel.bracket(harr, y)

    ax = ad(xarr)
    aax = ad(ax)
    plus = 0.5 * (aax + ax)
    minus = 0.5 * (aax - ax)
    zero = xarr - aax
    return LieMatrix(model, minus), LieMatrix(model, zero), LieMatrix(model, plus)


# ---------------------------------------------------------------------------
# wedge regions of h^j on V


def pierce_projections(algebra: AlgebraDescriptor, j: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Projections of ``V`` onto ``V_1(h^j), V_0(h^j), V_{-1}(h^j)`` via ``L(c^j)``."""
    if not 0 <= j <= algebra.rank:
        raise IndexOutOfRange(f"j must lie in [0, {algebra.rank}], got {j}")
    L = multiplication_operators(signed_frame_sum(algebra, j)).L
    eye = np.eye(algebra.dim)
    return 0.5 * L @ (L + eye), eye - L @ L, 0.5 * L @ (L - eye)


def wedge_membership_hj(x: JordanElement, j: int, tol: float | None = None) -> bool:
    """Membership in the positivity region of ``h^j``, tested on the Pierce decomposition."""
    tol = tol_algebra() if tol is None else tol
    algebra = x.algebra
    p_plus, _, p_minus = pierce_projections(algebra, j)
    r = algebra.rank
    positive = JordanElement(algebra, p_plus @ x.coords)
    negative = JordanElement(algebra, p_minus @ x.coords)
    lam_pos = spectral_decompose(positive).eigenvalues
    lam_neg = spectral_decompose(negative).eigenvalues
    # relative interior: r - j strictly positive eigenvalues in V_1, j strictly negative in V_{-1}
    ok_pos = (r - j == 0 or lam_pos[r - j - 1] > tol) and lam_pos[-1] >= -tol
    ok_neg = (j == 0 or lam_neg[r - j] < -tol) and lam_neg[0] <= tol
    return bool(ok_pos and ok_neg)


def wedge_membership_bracket(x: JordanElement, j: int, tol: float | None = None) -> bool:
    """Cross-check: ``[h^j, X_x]`` read back in ``V`` lies in the open positive cone."""
    model = matrix_model(x.algebra)
    hj = euler_elements(model).hj(j).mat
    image = model.g1_to_element(LieModel.bracket(hj, model.translation(x)))
    return in_open_cone(image, tol)


# ---------------------------------------------------------------------------
# spectral classification and orientation


class SpectrumClass(str, Enum):
    ELLIPTIC = "Elliptic"
    HYPERBOLIC = "Hyperbolic"
    MIXED = "Mixed"
    NILPOTENT = "Nilpotent-contaminated"


def _clusters(values: np.ndarray, radius: float) -> list[list[int]]:
    parent = list(range(len(values)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for a, b in itertools.combinations(range(len(values)), 2):
        if abs(values[a] - values[b]) <= radius:
            parent[find(a)] = find(b)
    groups: dict[int, list[int]] = {}
    for i in range(len(values)):
        groups.setdefault(find(i), []).append(i)
    return list(groups.values())


# Roundoff splits a Jordan block of size k into eigenvalues about eps^(1/k) apart, so blocks of
# size 3 (the largest in a 3-graded algebra) spread to ~1e-5; defects are searched at this radius.
DEFECT_RADIUS = 1e-4


def ad_spectrum_class(
    x: "LieMatrix | np.ndarray", model: LieModel | None = None, cluster_radius: float = 1e-6
) -> SpectrumClass:
    """Classify ``ad x``: semisimple with imaginary (resp. real) spectrum is elliptic (resp. hyperbolic)."""
    model = model or x.model
    ad = model.ad_matrix(as_array(x))
    if not np.all(np.isfinite(ad)):
        raise NumericalFailure("non-finite adjoint matrix")
    scale = max(1.0, float(np.linalg.norm(ad, 2)))
    try:
        lam = np.linalg.eigvals(ad)
    except np.linalg.LinAlgError as exc:
        raise NumericalFailure(str(exc)) from exc
    coarse = max(cluster_radius, DEFECT_RADIUS) * scale
    eye = np.eye(ad.shape[0])
    for cluster in _clusters(lam, coarse):
        centre = lam[cluster].mean()
        sv = np.linalg.svd(ad - centre * eye, compute_uv=False)
        nullity = int(np.sum(sv <= 10.0 * coarse))
        if nullity < len(cluster):
            return SpectrumClass.NILPOTENT
    radius = cluster_radius * scale
    if np.all(np.abs(lam.real) <= radius):
        return SpectrumClass.ELLIPTIC
    if np.all(np.abs(lam.imag) <= radius):
        return SpectrumClass.HYPERBOLIC
    return SpectrumClass.MIXED


def orientation_sign(model: LieModel, g: "LieMatrix | np.ndarray", tol: float | None = None) -> int:
    """Sign of ``det(Ad(g)|_{g_1(h)})`` in the coordinates of ``V``."""
    tol = tol_exp() if tol is None else tol
    garr = as_array(g)
    if not model.is_group(garr):
        raise NonGroupMatrix("matrix does not preserve the model's form")
    ginv = np.linalg.inv(garr)
    algebra = model.algebra
    columns = []
    for k in range(algebra.dim):
        basis_k = JordanElement(algebra, np.eye(algebra.dim)[k])
        image = garr @ model.translation(basis_k) @ ginv
        if np.abs(LieModel.bracket(model.h, image) - image).max() > tol * max(1.0, np.abs(image).max()):
            raise NotNormalizing("Ad(g) does not preserve g_1(h)")
        columns.append(model.g1_to_element(image).coords)
    det = np.linalg.det(np.stack(columns, axis=1))
    return 1 if det > 0 else -1


def lie_matrix_to_json(x: LieMatrix) -> dict:
    return x.to_json()
