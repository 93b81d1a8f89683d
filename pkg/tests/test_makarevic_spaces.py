import numpy as np
import pytest

from conformal_jordan.conformal_completion import chart_pullback, embed_point
from conformal_jordan.errors import IncompatibleKind, IndexOutOfRange
from conformal_jordan.jordan_core import (
    element,
    from_matrix,
    in_open_cone,
    invert_and_signature,
    join_direct_sum,
    make_algebra,
    random_element,
    random_unit_ball,
    random_with_spectrum,
    signed_frame_sum,
    to_matrix,
    unit,
    zero,
)
from conformal_jordan.lie_structure import LieModel, SpectrumClass, is_euler, matrix_model, pierce_projections, wedge_membership_hj
from conformal_jordan.makarevic_spaces import (
    InvolutionKind,
    automorphism_residual,
    cone_classification,
    fixed_algebra,
    flip_wedge_membership,
    flip_wedge_membership_pair,
    involution_catalog,
    make_involution,
    makarevic_membership,
    modularity_check,
    parse_kind,
    partial_cayley_dj,
    sigma_grading_residual,
    theta_alpha_composition_residual,
)

from conftest import ALL_KEYS, MATRIX_KEYS, algebra_for, key_id
from oracles import expected_table

TABLE = expected_table()


def _row_id(row):
    return f"{row['family']}-{row['size']}-{row['involution']}"


def _spec_for(row):
    return make_involution(make_algebra(row["family"], row["size"]), row["involution"])


# --- catalog ------------------------------------------------------------------


def test_pierce_zero_is_identity():
    for key in [("SymR", 3), ("HermC", 2), ("HermH", 2), ("SpinFactor", 4)]:
        spec = make_involution(algebra_for(key), InvolutionKind.PIERCE, 0)
        np.testing.assert_allclose(spec.v_matrix, np.eye(spec.algebra.dim))


def test_minkowski_first_reflection():
    spec = make_involution(make_algebra("SpinFactor", 4), "MinkowskiReflection(1)")
    np.testing.assert_allclose(spec.v_matrix, np.diag([1.0, 1.0, 1.0, -1.0]))
    pierce = make_involution(make_algebra("SpinFactor", 4), "Pierce(1)")
    np.testing.assert_allclose(pierce.v_matrix, np.diag([1.0, 1.0, -1.0, -1.0]))


@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_split_s1_is_conjugation_with_real_symmetric_fixed_set(r, rng):
    algebra = make_algebra("HermC", r)
    spec = make_involution(algebra, "SplitS1")
    x = random_element(algebra, rng)
    np.testing.assert_allclose(to_matrix(spec.apply(x)), to_matrix(x).conj(), atol=1e-12)
    fixed_dim = int(round(np.trace(0.5 * (spec.v_matrix + np.eye(algebra.dim)))))
    assert fixed_dim == r * (r + 1) // 2


def test_incompatible_kinds_raise():
    with pytest.raises(IncompatibleKind):
        make_involution(make_algebra("SymR", 3), "NonSplitNS1")
    with pytest.raises(IncompatibleKind):
        make_involution(make_algebra("SymR", 2), "SplitS1")
    with pytest.raises(IncompatibleKind):
        make_involution(make_algebra("HermC", 3), "NonSplitNS2")
    with pytest.raises(IncompatibleKind):
        make_involution(make_algebra("HermC", 2), "Flip")
    with pytest.raises(IncompatibleKind):
        make_involution(make_algebra("SymR", 2), InvolutionKind.PIERCE)
    with pytest.raises(IncompatibleKind):
        make_involution(make_algebra("SymR", 2), "Pierce(3)")


def test_parse_kind():
    assert parse_kind("Pierce(2)") == (InvolutionKind.PIERCE, 2)
    assert parse_kind("Flip") == (InvolutionKind.FLIP, None)


@pytest.mark.parametrize("key", ALL_KEYS, ids=key_id)
def test_catalog_entries_are_jordan_automorphisms(key, rng):
    for spec in involution_catalog(algebra_for(key)):
        assert automorphism_residual(spec, rng, samples=100) <= 1e-9, spec.label


@pytest.mark.parametrize("key", ALL_KEYS, ids=key_id)
def test_sigma_commutes_with_grading(key, rng):
    for spec in involution_catalog(algebra_for(key)):
        assert sigma_grading_residual(spec, rng, samples=100) <= 1e-8, spec.label


@pytest.mark.parametrize("key", ALL_KEYS, ids=key_id)
def test_theta_alpha_composition_is_tau_h(key, rng):
    for spec in involution_catalog(algebra_for(key)):
        assert theta_alpha_composition_residual(spec, rng) <= 1e-9, spec.label


@pytest.mark.parametrize("key", [k for k in MATRIX_KEYS] + [("SpinFactor", 4), ("SpinFactor", 5)], ids=key_id)
def test_pierce_involution_sign_pattern(key, rng):
    algebra = algebra_for(key)
    for j in range(algebra.rank + 1):
        spec = make_involution(algebra, InvolutionKind.PIERCE, j)
        plus, zero_proj, minus = pierce_projections(algebra, j)
        np.testing.assert_allclose(spec.v_matrix, plus + minus - zero_proj, atol=1e-10)


def test_catalog_matches_expected_table():
    table_keys = {(row["family"], row["size"], row["involution"]) for row in TABLE}
    catalog_keys = set()
    for family, size in {(row["family"], row["size"]) for row in TABLE}:
        for spec in involution_catalog(make_algebra(family, size)):
            catalog_keys.add((family, size, spec.label))
    assert catalog_keys == table_keys


# --- fixed algebras ----------------------------------------------------------


@pytest.mark.parametrize("row", TABLE, ids=_row_id)
def test_fixed_algebra_dimensions(row):
    spec = _spec_for(row)
    plus, minus = fixed_algebra(spec, "+"), fixed_algebra(spec, "-")
    assert (plus.dim, minus.dim) == (row["dim_fixed_plus"], row["dim_fixed_minus"])
    for report in (plus, minus):
        assert report.q_part_dim == spec.algebra.dim
        assert report.h_part_dim + report.q_part_dim == report.dim
        for b in report.basis[:5]:
            assert np.allclose(spec.theta(b.mat, report.sign), b.mat, atol=1e-9)


@pytest.mark.parametrize("key", MATRIX_KEYS + [("SpinFactor", d) for d in (3, 4, 5, 6)], ids=key_id)
def test_identity_fixes_the_maximal_compact_subalgebra(key):
    algebra = algebra_for(key)
    model = matrix_model(algebra)
    basis = model.derived_basis
    theta_op = np.stack([model.coords(LieModel.theta(b), basis) for b in basis], axis=1)
    noncompact_dim = int(round(0.5 * (basis.shape[0] - np.trace(theta_op))))
    assert fixed_algebra(make_involution(algebra, "Identity"), "+").dim == basis.shape[0] - noncompact_dim


@pytest.mark.parametrize("d", [3, 4, 5, 6])
def test_anti_de_sitter_reflection_fixes_lorentz_algebra(d):
    spec = make_involution(make_algebra("SpinFactor", d), InvolutionKind.MINKOWSKI_REFLECTION, d - 1)
    assert fixed_algebra(spec, "-").dim == (d + 1) * d // 2


@pytest.mark.parametrize("s", [1, 2])
def test_complex_pierce_middle_row(s):
    spec = make_involution(make_algebra("HermC", 2 * s), InvolutionKind.PIERCE, s)
    assert fixed_algebra(spec, "+").dim == 2 * (4 * s * s) - 1


# --- cones -------------------------------------------------------------------


@pytest.mark.parametrize("key", ALL_KEYS, ids=key_id)
def test_unit_sample_gives_expected_classes(key):
    for spec in involution_catalog(algebra_for(key)):
        assert cone_classification(spec, "+", 1).verdict is SpectrumClass.ELLIPTIC, spec.label
        assert cone_classification(spec, "-", 1).verdict is SpectrumClass.HYPERBOLIC, spec.label


@pytest.mark.parametrize("d", [3, 4, 5])
def test_minkowski_reflection_cones_are_uniform(d, rng):
    spec = make_involution(make_algebra("SpinFactor", d), InvolutionKind.MINKOWSKI_REFLECTION, 1)
    plus = cone_classification(spec, "+", 50, rng)
    minus = cone_classification(spec, "-", 50, rng)
    assert plus.verdict is SpectrumClass.ELLIPTIC and plus.counts == {"Elliptic": 50}
    assert minus.verdict is SpectrumClass.HYPERBOLIC and minus.counts == {"Hyperbolic": 50}


def test_cone_classification_needs_samples():
    with pytest.raises(ValueError):
        cone_classification(make_involution(make_algebra("SymR", 2), "Identity"), "+", 0)


# --- membership --------------------------------------------------------------


@pytest.mark.parametrize("key", ALL_KEYS, ids=key_id)
def test_unit_ball_lies_in_every_space(key, rng):
    algebra = algebra_for(key)
    for spec in involution_catalog(algebra):
        for sign in ("+", "-"):
            v = random_unit_ball(algebra, rng, 0.95)
            report = makarevic_membership(spec, sign, v)
            assert report.bergman_invertible and report.in_base_component is True
            assert makarevic_membership(spec, sign, zero(algebra)).in_base_component is True


@pytest.mark.parametrize("d", [3, 4, 5])
def test_anti_de_sitter_chart_excludes_timelike_unit_hyperboloid(d, rng):
    algebra = make_algebra("SpinFactor", d)
    spec = make_involution(algebra, InvolutionKind.MINKOWSKI_REFLECTION, d - 1)
    for _ in range(10):
        spatial = rng.standard_normal(d - 1)
        v = element(algebra, np.concatenate([[np.sqrt(max(0.0, spatial @ spatial - 1.0))], spatial]))
        if spatial @ spatial < 1.0:
            v = element(algebra, np.concatenate([[0.0], spatial / np.linalg.norm(spatial)]))
        assert abs(v.coords[0] ** 2 - v.coords[1:] @ v.coords[1:] + 1.0) < 1e-9
        assert not makarevic_membership(spec, "-", v).bergman_invertible


# --- modularity --------------------------------------------------------------


@pytest.mark.parametrize("row", TABLE, ids=_row_id)
def test_modularity_matches_table(row):
    spec = _spec_for(row)
    report = modularity_check(spec)
    assert report.modular == row["modular"]
    assert report.method == "lattice-enumeration"
    if report.modular:
        w = report.witness.mat
        assert is_euler(spec.model, w)
        assert np.allclose(spec.theta(w), w, atol=1e-7)
        assert np.allclose(spec.model.tau_h(w), w, atol=1e-7)
    else:
        assert report.witness is None


@pytest.mark.parametrize("s", [1, 2])
def test_real_middle_pierce_witness_has_half_integer_diagonal(s):
    report = modularity_check(make_involution(make_algebra("SymR", 2 * s), InvolutionKind.PIERCE, s))
    assert report.modular
    values = np.sort(np.linalg.eigvals(report.witness.mat).real)
    assert np.allclose(np.abs(values), 0.5, atol=1e-8)


@pytest.mark.parametrize("d", [3, 4, 5, 6])
def test_minkowski_modularity_depends_on_k(d):
    algebra = make_algebra("SpinFactor", d)
    assert not modularity_check(make_involution(algebra, InvolutionKind.MINKOWSKI_REFLECTION, 0)).modular
    for k in range(1, d):
        assert modularity_check(make_involution(algebra, InvolutionKind.MINKOWSKI_REFLECTION, k)).modular


# --- satellites and the invertibility criteria --------------------------------


@pytest.mark.parametrize("key", MATRIX_KEYS, ids=key_id)
def test_satellite_flow_selects_its_own_index(key, rng):
    algebra = algebra_for(key)
    r = algebra.rank
    for j in range(r + 1):
        for _ in range(300 // (r + 1) + 1):
            values = np.concatenate([rng.uniform(0.2, 2.0, r - j), -rng.uniform(0.2, 2.0, j)])
            v = random_with_spectrum(algebra, rng, values)
            for ell in range(r + 1):
                if ell != j:
                    assert not wedge_membership_hj(v, ell)
        assert wedge_membership_hj(signed_frame_sum(algebra, j), j)


def _bracket_image_contains_h(model, v):
    h = model.h
    x = model.translation(v)
    images = []
    for k in range(v.algebra.dim):
        y = LieModel.theta(model.translation(element(v.algebra, np.eye(v.algebra.dim)[k])))
        images.append(model.coords(LieModel.bracket(x, y)))
    span = np.stack(images, axis=1)
    target = model.coords(h)
    coeffs, *_ = np.linalg.lstsq(span, target, rcond=None)
    return np.linalg.norm(span @ coeffs - target) <= 1e-8 * max(1.0, np.linalg.norm(target))


@pytest.mark.parametrize("key", [("SymR", 3), ("HermC", 2), ("HermH", 2), ("SpinFactor", 4)], ids=key_id)
def test_invertibility_bracket_criterion(key, rng):
    algebra = algebra_for(key)
    model = matrix_model(algebra)
    for n in range(200 // 4):
        values = rng.uniform(0.3, 2.0, algebra.rank) * rng.choice([-1.0, 1.0], algebra.rank)
        if n % 2:
            values[rng.integers(algebra.rank)] = 0.0
        v = random_with_spectrum(algebra, rng, values)
        invertible = invert_and_signature(v).inverse is not None
        assert _bracket_image_contains_h(model, v) == invertible


@pytest.mark.parametrize("family", ["SymR", "HermC", "HermH"])
@pytest.mark.parametrize("r", [2, 4])
def test_invertible_elements_in_middle_pierce_space(family, r, rng):
    algebra = make_algebra(family, r)
    for j in range(r + 1):
        _, zero_proj, _ = pierce_projections(algebra, j)
        coords = rng.standard_normal((10_000, algebra.dim)) @ zero_proj.T
        matrices = np.tensordot(coords, algebra._basis_stack, axes=1)
        smallest = np.abs(np.linalg.eigvalsh(matrices)).min(axis=1)
        assert (smallest.max() > 1e-6) == (r == 2 * j)
    half = r // 2
    block = np.eye(half)
    witness = np.block([[np.zeros((half, half)), block], [block, np.zeros((half, half))]])
    if family == "HermH":
        witness = np.kron(witness, np.eye(2))
    w = from_matrix(algebra, witness)
    _, zero_proj, _ = pierce_projections(algebra, half)
    assert np.allclose(zero_proj @ w.coords, w.coords)
    assert invert_and_signature(w).inverse is not None


# --- flip wedges and partial Cayley transforms ------------------------------


@pytest.mark.parametrize("key", [("SymR", 2), ("HermC", 2), ("SpinFactor", 4)], ids=key_id)
def test_flip_wedge_examples(key, rng):
    algebra = algebra_for(key)
    e = unit(algebra)
    assert flip_wedge_membership(e, -e)
    assert not flip_wedge_membership(e, e)
    assert flip_wedge_membership_pair(join_direct_sum(e, -e))
    for _ in range(50):
        x, y = random_element(algebra, rng), random_element(algebra, rng)
        assert flip_wedge_membership(x, y) == (in_open_cone(x) and in_open_cone(-y))


@pytest.mark.parametrize("key", MATRIX_KEYS + [("SpinFactor", 3), ("SpinFactor", 5)], ids=key_id)
def test_partial_cayley_sends_origin_to_signed_frame_sum(key):
    algebra = algebra_for(key)
    origin = embed_point(zero(algebra))
    assert partial_cayley_dj(0, origin) == embed_point(unit(algebra))
    for j in range(algebra.rank + 1):
        image = chart_pullback(partial_cayley_dj(j, origin))
        assert image.allclose(signed_frame_sum(algebra, j), atol=1e-9)
        signature = invert_and_signature(image).signature
        assert (signature.p, signature.q) == (algebra.rank - j, j)
    with pytest.raises(IndexOutOfRange):
        partial_cayley_dj(algebra.rank + 1, origin)
