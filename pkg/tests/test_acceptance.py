"""Acceptance criteria: one test per criterion, each printing a PASS/FAIL line with its measured margin."""

import json
import time

import numpy as np

from conformal_jordan import cli
from conformal_jordan.conformal_completion import chart_pullback, embed_point
from conformal_jordan.grassmann_groups import (
    CheckMode,
    euler_eigenspaces,
    group_cayley,
    make_form_space,
    random_cone_element,
    random_unitary,
    unitary_and_cone_check,
)
from conformal_jordan.jordan_core import (
    bergman_operator,
    element,
    inverse,
    jordan_product,
    jordan_trace,
    make_algebra,
    random_element,
    random_unit_ball,
    random_with_spectrum,
    signed_frame_sum,
    spectral_decompose,
    square,
    unit,
    zero,
)
from conformal_jordan.lie_structure import (
    euler_elements,
    grading,
    jordan_product_via_brackets,
    matrix_model,
    orientation_sign,
    wedge_membership_hj,
)
from conformal_jordan.lorentz_quadric import (
    ESCAPE_THRESHOLD,
    Chart,
    Region,
    double_cone_membership_vector,
    gh_probe,
    stereographic_chart,
    wedge_regions,
)
from conformal_jordan.makarevic_spaces import (
    cone_classification,
    involution_catalog,
    make_involution,
    modularity_check,
    partial_cayley_dj,
)

from acceptance_report import record
from conftest import ALL_KEYS, MATRIX_KEYS, SPIN_KEYS, algebra_for
from oracles import expected_table, finite_difference_jacobian

JORDAN_TOL = 1e-9
SPECTRAL_TOL = 1e-9
GRADING_TOL = 1e-7
BRACKET_TOL = 1e-8
JACOBIAN_TOL = 1e-5
CAYLEY_TOL = 1e-8


def _rng(number):
    return np.random.default_rng(1000 + number)


def _elapsed(start):
    return f"{time.perf_counter() - start:.1f}s"


def test_01_jordan_axioms():
    start, rng = time.perf_counter(), _rng(1)
    worst_identity = worst_trace = 0.0
    for key in ALL_KEYS:
        algebra = algebra_for(key)
        for _ in range(200):
            x, y, z = (random_element(algebra, rng) for _ in range(3))
            x2 = square(x)
            lhs = jordan_product(x, jordan_product(x2, y)).coords
            rhs = jordan_product(x2, jordan_product(x, y)).coords
            worst_identity = max(worst_identity, float(np.abs(lhs - rhs).max()))
            left = jordan_trace(jordan_product(jordan_product(x, y), z))
            right = jordan_trace(jordan_product(x, jordan_product(y, z)))
            worst_trace = max(worst_trace, abs(left - right))
    passed = worst_identity <= JORDAN_TOL and worst_trace <= JORDAN_TOL
    record(1, "Jordan axioms", passed, f"max residuals {worst_identity:.1e} / {worst_trace:.1e} (tol {JORDAN_TOL:g}), {len(ALL_KEYS)} algebras, {_elapsed(start)}")
    assert passed


def test_02_spectral_integrity():
    start, rng = time.perf_counter(), _rng(2)
    worst = 0.0
    for key in ALL_KEYS:
        algebra = algebra_for(key)
        for _ in range(200):
            x = random_element(algebra, rng)
            data = spectral_decompose(x)
            frame = data.frame
            worst = max(worst, float(np.abs(data.reconstruct().coords - x.coords).max()))
            worst = max(worst, float(np.abs(sum(c.coords for c in frame) - unit(algebra).coords).max()))
            for i, c in enumerate(frame):
                worst = max(worst, float(np.abs(square(c).coords - c.coords).max()))
                for other in frame[i + 1 :]:
                    worst = max(worst, float(np.abs(jordan_product(c, other).coords).max()))
    passed = worst <= SPECTRAL_TOL
    record(2, "Spectral integrity", passed, f"max residual {worst:.1e} (tol {SPECTRAL_TOL:g}), {_elapsed(start)}")
    assert passed


def test_03_grading_suite():
    start, rng = time.perf_counter(), _rng(3)
    worst_spectrum = worst_bracket = 0.0
    dims_ok = True
    targets = np.array([-1.0, 0.0, 1.0])
    for key in ALL_KEYS:
        algebra = algebra_for(key)
        model = matrix_model(algebra)
        euler = euler_elements(model)
        elements = [euler.h] + [euler.hj(j) for j in range(algebra.rank + 1)] + [euler.kj(j) for j in range(algebra.rank + 1)]
        for x in elements:
            values = np.linalg.eigvals(model.ad_matrix(x.mat))
            worst_spectrum = max(worst_spectrum, float(np.min(np.abs(values[:, None] - targets), axis=1).max()))
            present = {int(round(v.real)) for v in values}
            dims_ok &= present == {-1, 0, 1}
        dims_ok &= grading(model, euler.h).dims()[2] == algebra.dim
        for _ in range(100):
            x, y = random_element(algebra, rng), random_element(algebra, rng)
            difference = jordan_product_via_brackets(model, x, y).coords - jordan_product(x, y).coords
            worst_bracket = max(worst_bracket, float(np.abs(difference).max()))
    passed = worst_spectrum <= GRADING_TOL and worst_bracket <= BRACKET_TOL and dims_ok
    record(
        3,
        "Grading suite",
        passed,
        f"spectrum deviation {worst_spectrum:.1e} (tol {GRADING_TOL:g}), bracket product {worst_bracket:.1e} (tol {BRACKET_TOL:g}), dims exact {dims_ok}, {_elapsed(start)}",
    )
    assert passed


def _rank_three_keys():
    keys = [k for k in ALL_KEYS if algebra_for(k).rank <= 3]
    return keys + [(f"DirectSum:{f}", 1) for f in ("SymR", "HermC", "HermH")]


def test_04_cone_classes_are_uniform():
    start, rng = time.perf_counter(), _rng(4)
    cases = mixed = 0
    failures = []
    for key in _rank_three_keys():
        for spec in involution_catalog(algebra_for(key)):
            for sign, expected in ((1, "Elliptic"), (-1, "Hyperbolic")):
                verdict = cone_classification(spec, sign, 50, rng)
                cases += 1
                mixed += verdict.verdict.value == "Mixed"
                if verdict.verdict.value != expected or verdict.counts != {expected: 50}:
                    failures.append(f"{key}/{spec.label}/{sign}")
    passed = not failures and mixed == 0
    record(4, "Cone classes", passed, f"{cases} (algebra, involution, sign) cases x 50 samples, {mixed} mixed, failures {failures[:3]}, {_elapsed(start)}")
    assert passed


def test_05_unit_ball_and_bergman_jacobian():
    start, rng = time.perf_counter(), _rng(5)
    singular = []
    for key in ALL_KEYS:
        algebra = algebra_for(key)
        specs = involution_catalog(algebra)
        for _ in range(200):
            v = random_unit_ball(algebra, rng, 0.99)
            for spec in specs:
                for sign in (1, -1):
                    if not bergman_operator(v, spec.apply(v) * sign).invertible:
                        singular.append(f"{key}/{spec.label}/{sign:+d}")
    worst_jacobian = 0.0
    pairs = 0
    keys = [k for k in ALL_KEYS if algebra_for(k).dim <= 16]
    while pairs < 100:
        algebra = algebra_for(keys[pairs % len(keys)])
        values = rng.uniform(0.3, 0.9, algebra.rank) * rng.choice([-1.0, 1.0], algebra.rank)
        x = random_with_spectrum(algebra, rng, values)
        y = random_unit_ball(algebra, rng, 0.8)

        def quasi_inverse(coords):
            return inverse(inverse(element(algebra, coords)) - y).coords

        jacobian = finite_difference_jacobian(quasi_inverse, x.coords)
        expected = np.linalg.inv(bergman_operator(x, y).matrix)
        worst_jacobian = max(worst_jacobian, float(np.abs(jacobian - expected).max()))
        pairs += 1
    passed = not singular and worst_jacobian <= JACOBIAN_TOL
    record(
        5,
        "Unit ball and Bergman operator",
        passed,
        f"{len(singular)} singular unit-ball cases, Jacobian deviation {worst_jacobian:.1e} on {pairs} pairs (tol {JACOBIAN_TOL:g}), {_elapsed(start)}",
    )
    assert passed


def test_06_modularity_table():
    start = time.perf_counter()
    rows = [row for row in expected_table() if row["rank"] <= 4]
    mismatches = []
    for row in rows:
        spec = make_involution(make_algebra(row["family"], row["size"]), row["involution"])
        if modularity_check(spec).modular != row["modular"]:
            mismatches.append(f"{row['family']}({row['size']})/{row['involution']}")
    negatives = sum(not row["modular"] for row in rows)
    passed = not mismatches
    record(6, "Modularity table", passed, f"{len(rows)} rows ({negatives} negative), mismatches {mismatches}, {_elapsed(start)}")
    assert passed


def test_07_partial_cayley_and_satellites():
    start, rng = time.perf_counter(), _rng(7)
    worst = 0.0
    leaks = []
    missing = []
    for key in MATRIX_KEYS + SPIN_KEYS:
        algebra = algebra_for(key)
        r = algebra.rank
        origin = embed_point(zero(algebra))
        for j in range(r + 1):
            image = chart_pullback(partial_cayley_dj(j, origin))
            worst = max(worst, float(np.abs(image.coords - signed_frame_sum(algebra, j).coords).max()))
            if not wedge_membership_hj(signed_frame_sum(algebra, j), j):
                missing.append(f"{key}/j={j}")
        if key[0] == "SpinFactor":
            continue
        for n in range(300):
            j = n % (r + 1)
            values = np.concatenate([rng.uniform(0.2, 2.0, r - j), -rng.uniform(0.2, 2.0, j)])
            v = random_with_spectrum(algebra, rng, values)
            for ell in range(r + 1):
                if ell != j and wedge_membership_hj(v, ell):
                    leaks.append(f"{key}/j={j}/l={ell}")
    passed = worst <= 1e-8 and not leaks and not missing
    record(7, "Partial Cayley maps and satellites", passed, f"d_j(0) deviation {worst:.1e} (tol 1e-8), satellite leaks {leaks[:3]}, missing witnesses {missing}, {_elapsed(start)}")
    assert passed


def test_08_de_sitter_wedge():
    start, rng = time.perf_counter(), _rng(8)
    disagreements = 0
    checked = 0
    escapes = []
    for d in (2, 3, 4, 5, 6):
        top, bottom = np.eye(d)[0], -np.eye(d)[0]
        for n in range(500):
            if n % 2:
                v = rng.uniform(-2.0, 2.0, d)
            else:
                spatial = rng.standard_normal(d - 1)
                spatial *= rng.uniform(0, 0.95) / max(np.linalg.norm(spatial), 1e-12)
                v = np.concatenate([[rng.uniform(-1, 1) * (1 - np.linalg.norm(spatial))], spatial])
            if abs(v[0] ** 2 - v[1:] @ v[1:] - 1.0) < 1e-8:
                continue
            checked += 1
            inside = wedge_regions(stereographic_chart(v, Chart.DE_SITTER), Region.DE_SITTER_WEDGE).member
            disagreements += inside != double_cone_membership_vector(v, top, bottom)
        algebra = make_algebra("SpinFactor", d)
        e0 = np.eye(d)[0]
        report = gh_probe(Region.DE_SITTER_WEDGE, element(algebra, 0.3 * e0), element(algebra, -0.3 * e0), 4000, rng)
        if report.escape_detected:
            escapes.append(d)
    passed = disagreements == 0 and not escapes
    record(8, "De Sitter wedge", passed, f"{disagreements} disagreements over {checked} samples, escapes at d={escapes}, {_elapsed(start)}")
    assert passed


def test_09_anti_de_sitter_wedge():
    start, rng = time.perf_counter(), _rng(9)
    d = 3
    labels = set()
    for _ in range(10_000):
        rest = rng.standard_normal(d - 1)
        head = rng.standard_normal(2)
        head *= np.sqrt(1.0 + rest @ rest) / np.linalg.norm(head)
        membership = wedge_regions(np.concatenate([head, rest]), Region.ANTI_DE_SITTER_WEDGE)
        if membership.member:
            labels.add(membership.component)
    algebra = make_algebra("SpinFactor", d)
    e0, last = np.eye(d)[0], np.eye(d)[d - 1]
    report = gh_probe(Region.ANTI_DE_SITTER_WEDGE, element(algebra, last + 0.3 * e0), element(algebra, last - 0.3 * e0), 10_000, rng)
    passed = len(labels) == 2 and report.escape_detected and report.min_boundary_distance < ESCAPE_THRESHOLD
    record(
        9,
        "Anti-de Sitter wedge",
        passed,
        f"{len(labels)} components, min boundary distance {report.min_boundary_distance:.1e} (threshold {ESCAPE_THRESHOLD:g}), {_elapsed(start)}",
    )
    assert passed


def test_10_unitary_group_suite():
    start, rng = time.perf_counter(), _rng(10)
    spaces = [("R", 2, 0), ("R", 4, 0), ("C", 2, 0), ("C", 3, 1), ("H", 2, 0), ("H", 3, 0)]
    cayley_failures = singular = cone_failures = 0
    eigenspaces_exact = True
    for key in spaces:
        space = make_form_space(*key)
        for _ in range(200):
            transform = group_cayley(random_element(space.algebra, rng), space)
            if transform is None:
                singular += 1
            elif not unitary_and_cone_check(transform, space, CheckMode.GROUP):
                cayley_failures += 1
        for _ in range(100):
            g, a = random_unitary(space, rng), random_cone_element(space, rng)
            cone_failures += not unitary_and_cone_check(g @ a @ np.linalg.inv(g), space, CheckMode.CONE_ELEMENT)
        h = euler_elements(matrix_model(space.algebra)).h.mat
        plus_identity, minus_identity = euler_eigenspaces(space)
        eigenspaces_exact &= bool(np.allclose(h @ plus_identity.rep, -0.5 * plus_identity.rep, atol=1e-14, rtol=0))
        eigenspaces_exact &= bool(np.allclose(h @ minus_identity.rep, 0.5 * minus_identity.rep, atol=1e-14, rtol=0))
    passed = cayley_failures == 0 and singular == 0 and cone_failures == 0 and eigenspaces_exact
    record(
        10,
        "Unitary group suite",
        passed,
        f"Cayley group failures {cayley_failures} (tol {CAYLEY_TOL:g}), singular {singular}, cone failures {cone_failures}, eigenspaces exact {eigenspaces_exact}, {_elapsed(start)}",
    )
    assert passed


def test_11_orientation_signs():
    start = time.perf_counter()
    results = {}
    for d in (3, 4, 5, 6):
        model = matrix_model(make_algebra("SpinFactor", d))
        diagonal = np.ones(d + 2)
        diagonal[[0, 1, 2, d + 1]] = -1.0
        results[f"so(2,{d})"] = (orientation_sign(model, np.diag(diagonal)), -1 if d % 2 else 1)
    for r in (1, 2, 3, 4):
        model = matrix_model(make_algebra("SymR", r))
        block = np.diag([-1.0] + [1.0] * (r - 1))
        results[f"sp({2 * r})"] = (orientation_sign(model, np.kron(np.eye(2), block)), -1 if r % 2 == 0 else 1)
    wrong = [name for name, (got, want) in results.items() if got != want]
    passed = not wrong
    record(11, "Orientation signs", passed, f"{len(results)} elements, wrong {wrong}, {_elapsed(start)}")
    assert passed


def test_12_verify_tables_end_to_end(capsys):
    start = time.perf_counter()
    code = cli.run(["verify-tables", "--max-rank", "3"])
    document = json.loads(capsys.readouterr().out)
    diff = document["report"]["diff"]
    passed = code == cli.EXIT_OK and diff == [] and document["report"]["rows_checked"] > 0
    with capsys.disabled():
        record(12, "verify-tables end to end", passed, f"exit {code}, {document['report']['rows_checked']} rows, diff {diff}, {_elapsed(start)}")
    assert passed
