"""Involutive Jordan automorphisms and the symmetric spaces they define in the conformal completion.

An involution ``alpha`` of ``V`` extends to an automorphism ``sigma`` of the
Lie model commuting with the grading.  It is stored as a conjugating matrix
``P`` and an antilinear flag: ``sigma(X) = P X P^{-1}`` or
``sigma(X) = P conj(X) P^{-1}``.  The twisted Cartan involutions are
``theta_alpha = theta o sigma`` and ``theta_{-alpha} = tau_h o theta_alpha``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from enum import Enum

import numpy as np
import scipy.linalg

from .config import tol_algebra
from .conformal_completion import CompletionPoint, MatrixGenerator, apply_generator
from .errors import IncompatibleKind, IndexOutOfRange, NumericalFailure, UnsupportedFamily
from .jordan_core import (
    AlgebraDescriptor,
    Family,
    JordanElement,
    bergman_operator,
    check_element,
    family_label,
    from_matrix,
    in_open_cone,
    jordan_product,
    random_positive,
    split_direct_sum,
    to_matrix,
)
from .lie_structure import (
    LieMatrix,
    LieModel,
    SpectrumClass,
    ad_spectrum_class,
    euler_elements,
    is_euler,
    matrix_model,
    realify,
    symplectic_form,
)

PATH_SAMPLES = 64
PATH_SINGULAR_RATIO = 1e-8


class InvolutionKind(str, Enum):
    IDENTITY = "Identity"
    PIERCE = "Pierce"
    SPLIT_S1 = "SplitS1"
    SPLIT_S2 = "SplitS2"
    NON_SPLIT_NS1 = "NonSplitNS1"
    NON_SPLIT_NS2 = "NonSplitNS2"
    MINKOWSKI_REFLECTION = "MinkowskiReflection"
    FLIP = "Flip"


PARAMETRIZED_KINDS = (InvolutionKind.PIERCE, InvolutionKind.MINKOWSKI_REFLECTION)


def parse_kind(text: str) -> tuple[InvolutionKind, int | None]:
    """Parse ``"Pierce(1)"``, ``"MinkowskiReflection(2)"`` or a bare kind name."""
    text = text.strip()
    if "(" in text:
        name, _, rest = text.partition("(")
        return InvolutionKind(name.strip()), int(rest.rstrip(")"))
    return InvolutionKind(text), None


def parse_sign(sign: int | str) -> int:
    if sign in (1, "+", "+1", "plus"):
        return 1
    if sign in (-1, "-", "-1", "minus"):
        return -1
    raise ValueError(f"sign must be + or -, got {sign!r}")


@dataclass(frozen=True, eq=False)
class InvolutionSpec:
    """An involution ``alpha`` of ``V`` together with its extension to the Lie model."""

    algebra: AlgebraDescriptor
    kind: InvolutionKind
    parameter: int | None
    v_matrix: np.ndarray = field(repr=False)
    lie_matrix: np.ndarray = field(repr=False)
    antilinear: bool = False

    @property
    def label(self) -> str:
        return self.kind.value if self.parameter is None else f"{self.kind.value}({self.parameter})"

    @property
    def model(self) -> LieModel:
        return matrix_model(self.algebra)

    def apply(self, x: JordanElement) -> JordanElement:
        return JordanElement(self.algebra, self.v_matrix @ check_element(x, self.algebra).coords)

    def sigma(self, x: np.ndarray) -> np.ndarray:
        p = self.lie_matrix
        return p @ (x.conj() if self.antilinear else x) @ np.linalg.inv(p)

    def theta(self, x: np.ndarray, sign: int | str = 1) -> np.ndarray:
        """``theta_alpha`` for sign ``+`` and ``tau_h o theta_alpha`` for sign ``-``."""
        image = LieModel.theta(self.sigma(x))
        return image if parse_sign(sign) > 0 else self.model.tau_h(image)


# ---------------------------------------------------------------------------
# catalog


def _linear_map_on_v(algebra: AlgebraDescriptor, block: np.ndarray, antilinear: bool) -> np.ndarray:
    inverse = np.linalg.inv(block)
    columns = []
    for k in range(algebra.dim):
        x = to_matrix(JordanElement(algebra, np.eye(algebra.dim)[k]))
        image = block @ (x.conj() if antilinear else x) @ inverse
        columns.append(from_matrix(algebra, image).coords)
    return np.stack(columns, axis=1)


def _signature_matrix(positive: int, negative: int) -> np.ndarray:
    return np.diag([1.0] * positive + [-1.0] * negative)


def make_involution(algebra: AlgebraDescriptor, kind: InvolutionKind | str, parameter: int | None = None) -> InvolutionSpec:
    """Build the involution of the given kind, checking compatibility with the family."""
    if isinstance(kind, str) and "(" in kind:
        kind, parameter = parse_kind(kind)
    kind = InvolutionKind(kind)
    family = algebra.family
    if kind in PARAMETRIZED_KINDS and parameter is None:
        raise IncompatibleKind(f"{kind.value} needs an integer parameter")
    if kind not in PARAMETRIZED_KINDS:
        parameter = None

    if kind is InvolutionKind.FLIP:
        if family is not Family.DIRECT_SUM:
            raise IncompatibleKind("Flip requires a DirectSum algebra")
        half = algebra.inner.dim
        swap_v = np.block([[np.zeros((half, half)), np.eye(half)], [np.eye(half), np.zeros((half, half))]])
        m = matrix_model(algebra.inner).matrix_size
        swap = np.block([[np.zeros((m, m)), np.eye(m)], [np.eye(m), np.zeros((m, m))]])
        return InvolutionSpec(algebra, kind, None, swap_v, swap.astype(matrix_model(algebra).dtype))

    if family is Family.DIRECT_SUM:
        if kind is InvolutionKind.IDENTITY:
            m = matrix_model(algebra).matrix_size
            return InvolutionSpec(algebra, kind, None, np.eye(algebra.dim), np.eye(m, dtype=matrix_model(algebra).dtype))
        raise IncompatibleKind(f"{kind.value} is not available on {algebra.name}")

    if family is Family.SPIN:
        d = algebra.size
        if kind is InvolutionKind.IDENTITY:
            v_diag = np.ones(d)
        elif kind is InvolutionKind.PIERCE:
            if not 0 <= parameter <= 2:
                raise IncompatibleKind(f"Pierce index must lie in [0, 2] for the spin factor, got {parameter}")
            v_diag = np.array([1.0, 1.0] + [-1.0] * (d - 2)) if parameter == 1 else np.ones(d)
        elif kind is InvolutionKind.MINKOWSKI_REFLECTION:
            if not 0 <= parameter <= d - 1:
                raise IncompatibleKind(f"reflection index must lie in [0, {d - 1}], got {parameter}")
            v_diag = np.diag(_signature_matrix(d - parameter, parameter)).copy()
        else:
            raise IncompatibleKind(f"{kind.value} is not available on {algebra.name}")
        lie = np.diag(np.concatenate([[1.0], v_diag, [1.0]]))
        return InvolutionSpec(algebra, kind, parameter, np.diag(v_diag), lie)

    if not algebra.is_matrix_family:
        raise UnsupportedFamily(f"no involution catalog for {algebra.name}")
    r, fld = algebra.size, algebra.field
    n = algebra.matrix_size
    antilinear = False
    if kind is InvolutionKind.IDENTITY:
        block = np.eye(n)
    elif kind is InvolutionKind.PIERCE:
        if not 0 <= parameter <= r:
            raise IncompatibleKind(f"Pierce index must lie in [0, {r}], got {parameter}")
        block = _signature_matrix(r - parameter, parameter)
        if fld == "H":
            block = np.kron(block, np.eye(2))
    elif kind is InvolutionKind.SPLIT_S1:
        if fld != "C":
            raise IncompatibleKind("SplitS1 (entrywise conjugation) requires HermC")
        block, antilinear = np.eye(n), True
    elif kind is InvolutionKind.SPLIT_S2:
        if fld != "H":
            raise IncompatibleKind("SplitS2 (conjugation by the quaternion unit i) requires HermH")
        block = np.kron(np.eye(r), np.diag([1j, -1j]))
    elif kind is InvolutionKind.NON_SPLIT_NS1:
        if fld != "R" or r % 2:
            raise IncompatibleKind("NonSplitNS1 requires SymR of even rank")
        block = symplectic_form(r // 2)
    elif kind is InvolutionKind.NON_SPLIT_NS2:
        if fld != "C" or r % 2:
            raise IncompatibleKind("NonSplitNS2 requires HermC of even rank")
        block, antilinear = symplectic_form(r // 2), True
    else:
        raise IncompatibleKind(f"{kind.value} is not available on {algebra.name}")
    model = matrix_model(algebra)
    block = block.astype(model.dtype)
    lie = scipy.linalg.block_diag(block, block)
    return InvolutionSpec(algebra, kind, parameter, _linear_map_on_v(algebra, block, antilinear), lie, antilinear)


def involution_catalog(algebra: AlgebraDescriptor) -> list[InvolutionSpec]:
    """All catalogued involutions compatible with ``algebra``."""
    specs = []
    candidates: list[tuple[InvolutionKind, int | None]] = [(InvolutionKind.IDENTITY, None)]
    if algebra.family is Family.DIRECT_SUM:
        candidates.append((InvolutionKind.FLIP, None))
    elif algebra.family is Family.SPIN:
        candidates.append((InvolutionKind.PIERCE, 1))
        candidates += [(InvolutionKind.MINKOWSKI_REFLECTION, j) for j in range(1, algebra.size)]
    else:
        candidates += [(InvolutionKind.PIERCE, j) for j in range(1, algebra.size)]
        candidates += [(k, None) for k in InvolutionKind if k not in PARAMETRIZED_KINDS]
    for kind, parameter in candidates:
        try:
            spec = make_involution(algebra, kind, parameter)
        except IncompatibleKind:
            continue
        if all(s.label != spec.label for s in specs):
            specs.append(spec)
    return specs


def automorphism_residual(spec: InvolutionSpec, rng: np.random.Generator, samples: int = 100) -> float:
    """Largest violation of ``alpha^2 = 1``, ``alpha(e) = e`` and multiplicativity over random pairs."""
    algebra = spec.algebra
    worst = max(
        float(np.abs(spec.v_matrix @ spec.v_matrix - np.eye(algebra.dim)).max()),
        float(np.abs(spec.apply(algebra.unit).coords - algebra.unit.coords).max()),
    )
    for _ in range(samples):
        x = JordanElement(algebra, rng.standard_normal(algebra.dim))
        y = JordanElement(algebra, rng.standard_normal(algebra.dim))
        lhs = spec.apply(jordan_product(x, y)).coords
        rhs = jordan_product(spec.apply(x), spec.apply(y)).coords
        worst = max(worst, float(np.abs(lhs - rhs).max()))
    return worst


# ---------------------------------------------------------------------------
# fixed algebras


@dataclass(frozen=True, eq=False)
class FixedAlgebraReport:
    sign: int
    dim: int
    basis: list[LieMatrix] = field(repr=False)
    h_part_dim: int
    q_part_dim: int


def _operator(model: LieModel, basis: np.ndarray, func) -> np.ndarray:
    return np.stack([model.coords(func(b), basis) for b in basis], axis=1)


def _kernel(matrix: np.ndarray, tol: float = 1e-8) -> np.ndarray:
    """Orthonormal kernel basis with an absolute cutoff, so that a zero matrix has full kernel."""
    _, s, vh = np.linalg.svd(matrix)
    rank = int(np.sum(s > tol * max(1.0, s[0] if s.size else 0.0)))
    return vh[rank:].conj().T


def _fixed_space(operator: np.ndarray) -> np.ndarray:
    return _kernel(operator - np.eye(operator.shape[0]))


def fixed_algebra(spec: InvolutionSpec, sign: int | str = 1, derived: bool = True) -> FixedAlgebraReport:
    """``ker(theta_{+-alpha} - 1)`` in the model (semisimple part unless ``derived=False``)."""
    sign = parse_sign(sign)
    model = spec.model
    basis = model.derived_basis if derived else model.basis
    theta_op = _operator(model, basis, lambda x: spec.theta(x, sign))
    tau_op = _operator(model, basis, model.tau_h)
    fixed = _fixed_space(theta_op)
    # theta_op and tau_op commute, so tau restricts to the fixed space
    tau_on_fixed = fixed.T @ tau_op @ fixed
    tau_eigen = np.linalg.eigvalsh(0.5 * (tau_on_fixed + tau_on_fixed.T))
    h_part = int(np.sum(tau_eigen > 0))
    matrices = [LieMatrix(model, model.from_coords(c, basis)) for c in fixed.T]
    return FixedAlgebraReport(sign, fixed.shape[1], matrices, h_part, fixed.shape[1] - h_part)


def sigma_grading_residual(spec: InvolutionSpec, rng: np.random.Generator, samples: int = 100) -> float:
    """How far ``sigma`` is from fixing ``h`` and restricting to ``v_matrix`` on ``g_1``."""
    model = spec.model
    worst = float(np.abs(spec.sigma(model.h) - model.h).max())
    for _ in range(samples):
        v = JordanElement(spec.algebra, rng.standard_normal(spec.algebra.dim))
        image = spec.sigma(model.translation(v))
        worst = max(worst, float(np.abs(image - model.translation(spec.apply(v))).max()))
    return worst


# ---------------------------------------------------------------------------
# cones


@dataclass(frozen=True, eq=False)
class ConeVerdict:
    verdict: SpectrumClass
    counts: dict[str, int]
    witness: JordanElement | None = None


def cone_classification(
    spec: InvolutionSpec, sign: int | str, n_samples: int, rng: np.random.Generator | None = None
) -> ConeVerdict:
    """Classify ``X_x +- theta_alpha(X_x)`` for the unit and random ``x`` in the open positive cone."""
    if n_samples < 1:
        raise ValueError("n_samples must be at least 1")
    sign = parse_sign(sign)
    rng = rng or np.random.default_rng(0)
    model = spec.model
    expected = SpectrumClass.ELLIPTIC if sign > 0 else SpectrumClass.HYPERBOLIC
    counts: dict[str, int] = {}
    witness = None
    samples = [spec.algebra.unit] + [random_positive(spec.algebra, rng) for _ in range(n_samples - 1)]
    for x in samples:
        X = model.translation(x)
        label = ad_spectrum_class(X + sign * spec.theta(X), model)
        counts[label.value] = counts.get(label.value, 0) + 1
        if label is not expected and witness is None:
            witness = x
    verdict = expected if witness is None else SpectrumClass.MIXED
    return ConeVerdict(verdict, counts, witness)


# ---------------------------------------------------------------------------
# membership via the Bergman operator


@dataclass(frozen=True)
class MembershipReport:
    bergman_invertible: bool
    in_base_component: bool | None


def _relative_smallest_singular(matrix: np.ndarray) -> float:
    sv = np.linalg.svd(matrix, compute_uv=False)
    return float(sv[-1] / max(1.0, sv[0]))


def makarevic_membership(
    spec: InvolutionSpec, sign: int | str, v: JordanElement, tol: float | None = None
) -> MembershipReport:
    """Invertibility of ``B(v, +-alpha(v))`` and a straight-line probe of the component of ``0``."""
    sign = parse_sign(sign)
    tol = tol_algebra() if tol is None else tol
    partner = spec.apply(v) * sign
    if not bergman_operator(v, partner, tol).invertible:
        return MembershipReport(False, False)
    for t in np.linspace(0.0, 1.0, PATH_SAMPLES):
        matrix = bergman_operator(v * t, partner * t, tol).matrix
        if _relative_smallest_singular(matrix) <= PATH_SINGULAR_RATIO:
            return MembershipReport(True, None)
    return MembershipReport(True, True)


# ---------------------------------------------------------------------------
# modularity


@dataclass(frozen=True, eq=False)
class ModularityReport:
    modular: bool
    witness: LieMatrix | None
    method: str = "lattice-enumeration"


def _span(matrices: list[np.ndarray], model: LieModel, basis: np.ndarray) -> np.ndarray:
    """Orthonormal coordinate basis (columns) of the span of ``matrices``."""
    if not matrices:
        return np.zeros((basis.shape[0], 0))
    coords = np.stack([model.coords(m, basis) for m in matrices], axis=1)
    u, s, _ = np.linalg.svd(coords, full_matrices=False)
    rank = int(np.sum(s > 1e-8 * max(1.0, s[0])))
    return u[:, :rank]


def _intersect(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Orthonormal basis of the intersection of two column spans."""
    if a.shape[1] == 0 or b.shape[1] == 0:
        return np.zeros((a.shape[0], 0))
    kernel = _kernel(np.hstack([a, -b]))
    if kernel.shape[1] == 0:
        return np.zeros((a.shape[0], 0))
    q, _ = np.linalg.qr(a @ kernel[: a.shape[1]])
    return q


def _maximal_abelian(model: LieModel, basis: np.ndarray, space: np.ndarray, rng: np.random.Generator) -> np.ndarray:
    """Centralizer in ``space`` of a generic element of it; abelian for the p-part of a reductive algebra."""
    if space.shape[1] == 0:
        return space
    generic = model.from_coords(space @ rng.standard_normal(space.shape[1]), basis)
    ad = model.ad_matrix(generic, basis)
    kernel = _kernel(ad @ space)
    abelian = space @ kernel
    matrices = [model.from_coords(c, basis) for c in abelian.T]
    for a, b in itertools.combinations(matrices, 2):
        if np.abs(LieModel.bracket(a, b)).max() > 1e-7:
            raise NumericalFailure("centralizer of a generic element is not abelian")
    return abelian


def _joint_weights(model: LieModel, abelian: list[np.ndarray], rng: np.random.Generator) -> np.ndarray:
    """Distinct joint eigenvalue vectors of ``ad`` of a commuting family of hermitian elements."""
    ads = [model.ad_matrix(a) for a in abelian]
    mixed = sum(rng.standard_normal() * ad for ad in ads)
    values, vectors = np.linalg.eigh(0.5 * (mixed + mixed.T))
    weights = []
    start = 0
    for stop in range(1, len(values) + 1):
        if stop == len(values) or values[stop] - values[stop - 1] > 1e-6:
            block = vectors[:, start:stop]
            weights.append([np.trace(block.T @ ad @ block) / block.shape[1] for ad in ads])
            start = stop
    weights = np.array(weights)
    unique: list[np.ndarray] = []
    for w in weights:
        if np.linalg.norm(w) > 1e-7 and all(np.linalg.norm(w - u) > 1e-6 for u in unique):
            unique.append(w)
    return np.array(unique).reshape(-1, len(abelian))


def modularity_check(spec: InvolutionSpec, rng: np.random.Generator | None = None) -> ModularityReport:
    """Search for an Euler element of ``g`` in ``h^(alpha)`` intersected with the derived fixed algebra.

    Euler elements are hyperbolic, hence conjugate into a maximal abelian
    subspace ``a`` of the ``-1`` eigenspace of ``theta`` there.  On ``a`` an
    Euler element takes values in ``{-1, 0, 1}`` on every root, so it is
    determined by its values on a basis of roots; all ``3^rank`` patterns
    are tried.
    """
    rng = rng or np.random.default_rng(0)
    model = spec.model
    basis = model.basis
    fixed = [m.mat for m in fixed_algebra(spec, 1, derived=True).basis]
    fixed_span = _span(fixed, model, basis)
    derived = _span([LieModel.bracket(a, b) for a, b in itertools.combinations(fixed, 2)], model, basis)
    theta_op = _operator(model, basis, LieModel.theta)
    tau_op = _operator(model, basis, model.tau_h)
    minus_theta = _kernel(theta_op + np.eye(model.dim))
    plus_tau = _fixed_space(tau_op)
    p_part = _intersect(_intersect(_intersect(fixed_span, derived), plus_tau), minus_theta)
    abelian_coords = _maximal_abelian(model, basis, p_part, rng)
    abelian = [model.from_coords(c) for c in abelian_coords.T]
    if not abelian:
        return ModularityReport(False, None)
    weights = _joint_weights(model, abelian, rng)
    rank = len(abelian)
    if weights.shape[0] == 0:
        return ModularityReport(False, None)
    _, _, pivots = scipy.linalg.qr(weights.T, pivoting=True)
    independent = weights[pivots[:rank]]
    if np.linalg.matrix_rank(independent, tol=1e-8) < rank:
        raise NumericalFailure("roots do not span the dual of the abelian subspace")
    for pattern in itertools.product((-1.0, 0.0, 1.0), repeat=rank):
        if not any(pattern):
            continue
        coeffs = np.linalg.solve(independent, np.array(pattern))
        values = weights @ coeffs
        if np.all(np.min(np.abs(values[:, None] - np.array([-1.0, 0.0, 1.0])), axis=1) < 1e-6):
            candidate = sum(c * a for c, a in zip(coeffs, abelian))
            fixed_ok = np.abs(spec.theta(candidate) - candidate).max() < 1e-7
            tau_ok = np.abs(model.tau_h(candidate) - candidate).max() < 1e-7
            if fixed_ok and tau_ok and is_euler(model, candidate):
                return ModularityReport(True, LieMatrix(model, candidate))
    return ModularityReport(False, None)


# ---------------------------------------------------------------------------
# flip wedge and partial Cayley transforms


def flip_wedge_membership(x: JordanElement, y: JordanElement) -> bool:
    """``(x, y)`` in ``V_+ x (-V_+)``, the positivity region of ``h`` on the product."""
    return in_open_cone(x) and in_open_cone(-y)


def flip_wedge_membership_pair(v: JordanElement) -> bool:
    """The same test for an element of a DirectSum algebra."""
    return flip_wedge_membership(*split_direct_sum(v))


def partial_cayley_dj(j: int, p: CompletionPoint) -> CompletionPoint:
    """Apply ``d_j = exp(pi/2 z_k^j)``."""
    euler = euler_elements(matrix_model(p.algebra))
    if not 0 <= j <= euler.rank:
        raise IndexOutOfRange(f"j must lie in [0, {euler.rank}], got {j}")
    return apply_generator(MatrixGenerator(euler.dj(j)), p)


def theta_alpha_composition_residual(spec: InvolutionSpec, rng: np.random.Generator, samples: int = 20) -> float:
    """Distance of ``theta_alpha o theta_{-alpha}`` from ``tau_h`` on random model elements."""
    model = spec.model
    worst = 0.0
    for _ in range(samples):
        x = model.from_coords(rng.standard_normal(model.dim))
        worst = max(worst, float(np.abs(spec.theta(spec.theta(x, -1), 1) - model.tau_h(x)).max()))
    return worst


def verdict_json(spec: InvolutionSpec, sign: int, fixed: FixedAlgebraReport, cone: ConeVerdict, modular: ModularityReport) -> dict:
    data = {
        "family": family_label(spec.algebra),
        "size": spec.algebra.size,
        "involution": spec.label,
        "sign": "+" if sign > 0 else "-",
        "dim_fixed": fixed.dim,
        "cone_class": cone.verdict.value,
        "modular": modular.modular,
    }
    if modular.witness is not None:
        data["witness"] = realify(modular.witness.mat).tolist()
    return data


__all__ = [
    "ConeVerdict",
    "FixedAlgebraReport",
    "InvolutionKind",
    "InvolutionSpec",
    "MembershipReport",
    "ModularityReport",
    "automorphism_residual",
    "cone_classification",
    "fixed_algebra",
    "flip_wedge_membership",
    "flip_wedge_membership_pair",
    "involution_catalog",
    "makarevic_membership",
    "make_involution",
    "modularity_check",
    "parse_kind",
    "parse_sign",
    "partial_cayley_dj",
    "sigma_grading_residual",
    "theta_alpha_composition_residual",
    "verdict_json",
]
