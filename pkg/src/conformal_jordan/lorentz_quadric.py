"""Lorentzian geometry on the null quadric ``Q(R^{2,d})``: de Sitter and anti-de Sitter charts and wedges.

Coordinates on ``R^{2,d}`` are ``(x_1, v_0, v_1, .., v_{d-1}, x_{d+2})`` with
form ``x_1^2 + v_0^2 - |v|^2 - x_{d+2}^2``.  De Sitter space sits in the
affine slice ``x_1 = 1`` as ``y in R^{1,d}`` with ``y.y = -1``; anti-de
Sitter space sits in the slice ``x_{d+2} = -1`` as ``x in R^{2,d-1}`` with
``x.x = 1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .config import tol_algebra
from .errors import NotCausallyRelated, NotOnHypersurface, NotTangent, OutsideChartDomain
from .jordan_core import AlgebraDescriptor, Family, JordanElement, eigenvalues, in_open_cone, jordan_trace, split_direct_sum

HYPERSURFACE_TOL = 1e-8
NULL_BLOCK_TOL = 1e-8
ZERO_BLOCK_TOL = 1e-10
ESCAPE_THRESHOLD = 1e-3


def minkowski_gram(n: int) -> np.ndarray:
    """``diag(1, -1, ..., -1)`` of size ``n``."""
    return np.diag([1.0] + [-1.0] * (n - 1))


def pairing(gram: np.ndarray, x: np.ndarray, y: np.ndarray | None = None) -> float:
    y = x if y is None else y
    return float(x @ gram @ y)


def hat_gram(d: int) -> np.ndarray:
    """Form of ``R^{2,d-1}``, the ambient space of anti-de Sitter space."""
    return np.diag([1.0, 1.0] + [-1.0] * (d - 1))


def tilde_gram(d: int) -> np.ndarray:
    return np.diag([1.0, 1.0] + [-1.0] * d)


@dataclass(frozen=True, eq=False)
class QuadricPoint:
    """A null ray in ``R^{2,d}``."""

    ray: np.ndarray

    def __post_init__(self) -> None:
        ray = np.asarray(self.ray, dtype=float).reshape(-1)
        norm = float(np.linalg.norm(ray))
        if ray.size < 4 or norm == 0.0:
            raise NotOnHypersurface("a quadric point needs a nonzero vector of length d + 2 >= 4")
        if abs(pairing(tilde_gram(ray.size - 2), ray)) >= 1e-9 * norm**2:
            raise NotOnHypersurface("ray is not null")
        object.__setattr__(self, "ray", ray)

    @property
    def d(self) -> int:
        return self.ray.size - 2

    def normalized(self) -> np.ndarray:
        unit = self.ray / np.linalg.norm(self.ray)
        return unit * np.sign(unit[np.argmax(np.abs(unit) > ZERO_BLOCK_TOL)])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QuadricPoint) or other.d != self.d:
            return NotImplemented
        return bool(np.allclose(self.normalized(), other.normalized(), atol=1e-8))

    __hash__ = None


# ---------------------------------------------------------------------------
# charts


class Chart(str, Enum):
    GENERAL = "General"
    DE_SITTER = "DeSitter"
    ANTI_DE_SITTER = "AntiDeSitter"


def _vector(v: JordanElement | np.ndarray) -> np.ndarray:
    if isinstance(v, JordanElement):
        if v.algebra.family is not Family.SPIN:
            raise OutsideChartDomain("Lorentzian charts need a spin factor element")
        return v.coords
    return np.asarray(v, dtype=float)


def stereographic_chart(v: JordanElement | np.ndarray, chart: Chart | str = Chart.GENERAL, gram: np.ndarray | None = None) -> np.ndarray:
    """Image of ``v`` in the sphere of ``R + V`` (General, AntiDeSitter) or in de Sitter space."""
    chart = Chart(chart)
    x = _vector(v)
    gram = minkowski_gram(x.size) if gram is None else gram
    b = pairing(gram, x)
    if chart is Chart.DE_SITTER:
        if abs(1.0 - b) <= tol_algebra():
            raise OutsideChartDomain("the de Sitter chart excludes the unit sphere beta(v, v) = 1")
        return np.concatenate([2.0 * x / (1.0 - b), [(b + 1.0) / (b - 1.0)]])
    if abs(1.0 + b) <= tol_algebra():
        raise OutsideChartDomain("the chart excludes beta(v, v) = -1")
    return np.concatenate([[(1.0 - b) / (1.0 + b)], 2.0 * x / (1.0 + b)])


def stereographic_inverse(w: np.ndarray, chart: Chart | str = Chart.GENERAL, gram: np.ndarray | None = None) -> np.ndarray:
    """Inverse of :func:`stereographic_chart` on its domain."""
    chart = Chart(chart)
    w = np.asarray(w, dtype=float)
    n = w.size - 1
    if chart is Chart.DE_SITTER:
        if abs(pairing(minkowski_gram(n + 1), w) + 1.0) > HYPERSURFACE_TOL * max(1.0, w @ w):
            raise NotOnHypersurface("point is not on de Sitter space")
        if abs(1.0 - w[-1]) <= tol_algebra():
            raise OutsideChartDomain("the de Sitter chart excludes y_d = 1")
        return w[:-1] / (1.0 - w[-1])
    gram = minkowski_gram(n) if gram is None else gram
    norm = w[0] ** 2 + pairing(gram, w[1:])
    if abs(norm - 1.0) > HYPERSURFACE_TOL * max(1.0, w @ w):
        raise NotOnHypersurface("point is not on the unit sphere of R + V")
    if abs(1.0 + w[0]) <= tol_algebra():
        raise OutsideChartDomain("the inverse chart is undefined at w_1 = -1")
    return w[1:] / (1.0 + w[0])


def quadric_from_de_sitter(y: np.ndarray) -> QuadricPoint:
    return QuadricPoint(np.concatenate([[1.0], y]))


def quadric_from_anti_de_sitter(x: np.ndarray) -> QuadricPoint:
    return QuadricPoint(np.concatenate([x, [-1.0]]))


def de_sitter_from_quadric(p: QuadricPoint) -> np.ndarray:
    ray = p.ray
    if abs(ray[0]) <= ZERO_BLOCK_TOL * np.linalg.norm(ray):
        raise OutsideChartDomain("ray with x_1 = 0 is not in de Sitter space")
    return ray[1:] / ray[0]


def anti_de_sitter_from_quadric(p: QuadricPoint) -> np.ndarray:
    ray = p.ray
    if abs(ray[-1]) <= ZERO_BLOCK_TOL * np.linalg.norm(ray):
        raise OutsideChartDomain("ray with x_{d+2} = 0 is not in anti-de Sitter space")
    return -ray[:-1] / ray[-1]


# ---------------------------------------------------------------------------
# wedges


class Region(str, Enum):
    DE_SITTER_WEDGE = "ds-wedge"
    ANTI_DE_SITTER_WEDGE = "ads-wedge"
    POSITIVE_CONE = "cone"
    FLIP_WEDGE = "flip-wedge"


class Component(str, Enum):
    LEFT = "Left"
    RIGHT = "Right"


@dataclass(frozen=True)
class WedgeMembership:
    member: bool
    component: Component | None = None


def wedge_regions(x: np.ndarray, which: Region | str) -> WedgeMembership:
    """Membership in the positivity region of the boost generator in de Sitter or anti-de Sitter space.

    De Sitter: ``-y_d > |y_0|``.  Anti-de Sitter: ``x_{d+1}^2 > x_2^2`` with
    ``x_{d+1}`` on the side of ``1 + x_1``; the component is ``Right`` when
    ``x_1 > 0`` (chart points with ``-1 < beta < 0``) and ``Left`` otherwise.
    """
    which = Region(which)
    x = np.asarray(x, dtype=float)
    scale = max(1.0, float(x @ x))
    if which is Region.DE_SITTER_WEDGE:
        if abs(pairing(minkowski_gram(x.size), x) + 1.0) > HYPERSURFACE_TOL * scale:
            raise NotOnHypersurface("point is not on de Sitter space")
        return WedgeMembership(bool(-x[-1] > abs(x[0])))
    if which is Region.ANTI_DE_SITTER_WEDGE:
        if abs(pairing(hat_gram(x.size - 1), x) - 1.0) > HYPERSURFACE_TOL * scale:
            raise NotOnHypersurface("point is not on anti-de Sitter space")
        member = x[-1] ** 2 > x[1] ** 2 and x[-1] * (1.0 + x[0]) > 0
        if not member:
            return WedgeMembership(False)
        return WedgeMembership(True, Component.RIGHT if x[0] > 0 else Component.LEFT)
    raise ValueError(f"wedge_regions handles the de Sitter and anti-de Sitter wedges, not {which.value}")


def rindler_membership(v: np.ndarray) -> bool:
    """Chart description of the anti-de Sitter wedge: ``v_{d-1} > |v_0|`` off ``beta(v, v) = -1``."""
    v = np.asarray(v, dtype=float)
    return bool(v[-1] > abs(v[0]) and abs(pairing(minkowski_gram(v.size), v) + 1.0) > tol_algebra())


def double_cone_membership_vector(v: np.ndarray, top: np.ndarray, bottom: np.ndarray) -> bool:
    """``v`` in ``(top - V+) cap (bottom + V+)`` for Minkowski vectors."""
    return _in_light_cone(top - v) and _in_light_cone(v - bottom)


def _in_light_cone(x: np.ndarray) -> bool:
    return bool(x[0] > np.linalg.norm(x[1:]))


# ---------------------------------------------------------------------------
# anti-de Sitter exponential


def ads_exp(p: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Geodesic exponential of anti-de Sitter space in ``R^{2,d-1}``."""
    p, y = np.asarray(p, dtype=float), np.asarray(y, dtype=float)
    gram = hat_gram(p.size - 1)
    scale = max(1.0, float(p @ p))
    if abs(pairing(gram, p) - 1.0) > HYPERSURFACE_TOL * scale:
        raise NotOnHypersurface("base point is not on anti-de Sitter space")
    if abs(pairing(gram, p, y)) > HYPERSURFACE_TOL * scale * max(1.0, float(np.linalg.norm(y))):
        raise NotTangent("vector is not tangent at the base point")
    b = pairing(gram, y)
    if b >= 0:
        root = np.sqrt(b)
        return np.cos(root) * p + np.sinc(root / np.pi) * y
    root = np.sqrt(-b)
    return np.cosh(root) * p + (np.sinh(root) / root) * y


# ---------------------------------------------------------------------------
# boundary strata


class Stratum(str, Enum):
    CC_INTERIOR = "AdS^p x S^q"
    CC_BOUNDARY = "Q(R^{2,p-1})"
    NCC_INTERIOR = "dS^p x H^q"
    NCC_OPPOSITE = "H^p x dS^q"
    NCC_SPHERE = "S^{p-1}"
    NCC_PRODUCT = "S^{p-1} x R^x x S^{q-1}"


def strata_blocks(d: int, j: int, split: str) -> tuple[list[int], list[int]]:
    """Index blocks of ``R^{2,d}`` separating the two factors for the reflection ``r_j``."""
    if not 0 <= j <= d - 1:
        raise ValueError(f"j must lie in [0, {d - 1}], got {j}")
    fixed_spatial = list(range(2, d + 1 - j))
    negated = list(range(d + 1 - j, d + 1))
    if split == "CC":
        return [0, 1] + negated, fixed_spatial + [d + 1]
    if split == "NCC":
        return [1] + negated + [d + 1], [0] + fixed_spatial
    raise ValueError(f"split must be CC or NCC, got {split!r}")


def boundary_stratum(p: QuadricPoint, j: int, split: str = "CC") -> Stratum:
    """Orbit type of ``p`` under the symmetry group of the reflection ``r_j``."""
    x = p.normalized()
    gram = tilde_gram(p.d)
    _, second = strata_blocks(p.d, j, split)
    block = x[second]
    block_form = float(block @ gram[np.ix_(second, second)] @ block)
    block_norm = float(np.linalg.norm(block))
    if split == "CC":
        return Stratum.CC_BOUNDARY if block_norm < ZERO_BLOCK_TOL else Stratum.CC_INTERIOR
    if block_norm < ZERO_BLOCK_TOL:
        return Stratum.NCC_SPHERE
    if abs(block_form) < NULL_BLOCK_TOL * block_norm**2:
        return Stratum.NCC_PRODUCT
    return Stratum.NCC_INTERIOR if block_form > 0 else Stratum.NCC_OPPOSITE


def random_null_ray(d: int, rng: np.random.Generator) -> QuadricPoint:
    """Null ray with uniformly random unit directions in the positive block ``(x_1, v_0)`` and the negative block."""
    positive = rng.standard_normal(2)
    negative = rng.standard_normal(d)
    return QuadricPoint(np.concatenate([positive / np.linalg.norm(positive), negative / np.linalg.norm(negative)]))


# ---------------------------------------------------------------------------
# global hyperbolicity probe


@dataclass(frozen=True, eq=False)
class GHProbeReport:
    region: Region
    a: JordanElement = field(repr=False)
    b: JordanElement = field(repr=False)
    samples: int
    inside: int
    min_boundary_distance: float
    escape_detected: bool

    def to_json(self) -> dict:
        return {
            "region": self.region.value,
            "a": self.a.coords.tolist(),
            "b": self.b.coords.tolist(),
            "samples": self.samples,
            "min_boundary_distance": self.min_boundary_distance,
            "escape_detected": self.escape_detected,
        }


def _cone_margin(x: JordanElement) -> float:
    """Euclidean distance from ``x`` to the boundary of the positive cone in natural coordinates."""
    lam = float(eigenvalues(x).min())
    return lam / np.sqrt(2.0) if x.algebra.family is Family.SPIN else lam


def _boundary_distance(region: Region, x: JordanElement, reference: Component | None) -> float | None:
    """Distance to the boundary of the region, or ``None`` if ``x`` lies outside it."""
    if region is Region.POSITIVE_CONE:
        margin = _cone_margin(x)
    elif region is Region.FLIP_WEDGE:
        first, second = split_direct_sum(x)
        margin = min(_cone_margin(first), _cone_margin(-second))
    elif region is Region.DE_SITTER_WEDGE:
        unit = x.algebra.unit
        margin = min(_cone_margin(unit - x), _cone_margin(x + unit))
    else:
        v = x.coords
        beta = pairing(minkowski_gram(v.size), v)
        gradient = 2.0 * minkowski_gram(v.size) @ v
        if not rindler_membership(v) or _ads_component(beta) is not reference:
            return None
        rindler = (v[-1] - abs(v[0])) / np.sqrt(2.0)
        margin = min(rindler, abs(beta + 1.0) / max(float(np.linalg.norm(gradient)), 1e-300))
    return margin if margin > 0 else None


def _ads_component(beta: float) -> Component:
    return Component.RIGHT if beta > -1.0 else Component.LEFT


def _batch_in_open_cone(algebra: AlgebraDescriptor, coords: np.ndarray) -> np.ndarray:
    """Row-wise open cone membership for a batch of coordinate vectors."""
    if algebra.family is Family.DIRECT_SUM:
        half = algebra.inner.dim
        return _batch_in_open_cone(algebra.inner, coords[:, :half]) & _batch_in_open_cone(algebra.inner, coords[:, half:])
    if algebra.family is Family.SPIN:
        return coords[:, 0] > np.linalg.norm(coords[:, 1:], axis=1)
    matrices = np.tensordot(coords, algebra._basis_stack, axes=1)
    return np.linalg.eigvalsh(matrices)[:, 0] > tol_algebra()


def _coordinate_bounds(w: JordanElement) -> np.ndarray:
    if w.algebra.family is Family.DIRECT_SUM:
        return np.concatenate([_coordinate_bounds(part) for part in split_direct_sum(w)])
    return jordan_trace(w) * np.sqrt(np.diag(np.linalg.inv(w.algebra.trace_form)))


def _sample_double_cone(a: JordanElement, b: JordanElement, n: int, rng: np.random.Generator) -> list[JordanElement]:
    """Rejection sampling of ``(a - V+) cap (b + V+)`` from a box around its centre.

    With ``w = (a - b) / 2`` every ``y = x - centre`` satisfies ``tr(y^2) <= tr(w)^2``,
    which bounds each coordinate by ``tr(w) sqrt((G^{-1})_kk)`` for the trace form ``G``
    (applied to each summand of a direct sum separately).
    """
    algebra = a.algebra
    centre = 0.5 * (a.coords + b.coords)
    half_widths = _coordinate_bounds(0.5 * (a - b))
    accepted: list[JordanElement] = []
    for _ in range(10_000):
        batch = centre + rng.uniform(-half_widths, half_widths, size=(max(n, 4096), algebra.dim))
        keep = _batch_in_open_cone(algebra, a.coords - batch) & _batch_in_open_cone(algebra, batch - b.coords)
        accepted.extend(JordanElement(algebra, c) for c in batch[keep][: n - len(accepted)])
        if len(accepted) == n:
            return accepted
    return accepted


def gh_probe(
    region: Region | str, a: JordanElement, b: JordanElement, n_samples: int = 4000, rng: np.random.Generator | None = None
) -> GHProbeReport:
    """Sample the causal interval between ``b`` and ``a`` and look for clustering at the region's boundary."""
    region = Region(region)
    rng = rng or np.random.default_rng(0)
    if region in (Region.DE_SITTER_WEDGE, Region.ANTI_DE_SITTER_WEDGE) and a.algebra.family is not Family.SPIN:
        raise OutsideChartDomain("de Sitter and anti-de Sitter probes need spin factor points")
    if region is Region.FLIP_WEDGE and a.algebra.family is not Family.DIRECT_SUM:
        raise OutsideChartDomain("the flip wedge lives in a DirectSum algebra")
    if not in_open_cone(a - b):
        raise NotCausallyRelated("a - b must lie in the open positive cone")
    reference = None
    if region is Region.ANTI_DE_SITTER_WEDGE:
        reference = _ads_component(pairing(minkowski_gram(a.algebra.dim), a.coords))
    for endpoint in (a, b):
        if _boundary_distance(region, endpoint, reference) is None:
            raise OutsideChartDomain("probe endpoints must lie in the region")
    distances = []
    for x in _sample_double_cone(a, b, n_samples, rng):
        distance = _boundary_distance(region, x, reference)
        if distance is not None:
            distances.append(distance)
    minimum = float(min(distances)) if distances else float("inf")
    return GHProbeReport(region, a, b, n_samples, len(distances), minimum, minimum < ESCAPE_THRESHOLD)


def lightray_inversion(x: np.ndarray) -> np.ndarray:
    """``(y_0, y_1) -> (y_0, -1/y_1)`` in lightray coordinates of ``R^{1,1}``, written in ``(x_0, x_1)``."""
    x0, x1 = float(x[0]), float(x[1])
    beta = x0**2 - x1**2
    return np.array([(beta - 1.0) / (2.0 * (x0 - x1)), (beta + 1.0) / (2.0 * (x0 - x1))])

