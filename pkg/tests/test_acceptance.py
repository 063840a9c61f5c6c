"""Acceptance suite: each test covers one criterion and prints a pass/fail
line.  All comparisons are exact integer or exact rational-function equality;
there are no tolerances anywhere.

Run with `pytest tests/test_acceptance.py -s` to see the per-criterion lines.
"""

import itertools
import random

import pytest

from stringyhodge import (
    ResolutionDescriptor,
    a_pq,
    check_pd_identity,
    check_symmetry,
    closed_form_h,
    conjecture_report,
    crepant_compare,
    defect_bound_check,
    exact_divide_test,
    h22st_fourfold,
    load_bundle,
    local_defect,
    product_stringy,
    projective_space,
    stringy_e,
    stringy_hodge_table,
    threefold_h22_minus_h11,
    weight_graded_dims,
)
from conftest import CORPUS, random_descriptor
from test_sncweights import brute_force_cohomology, complex_from_faces


def _report(number, description, passed):
    print(f"ACCEPTANCE {number} [{description}]: {'PASS' if passed else 'FAIL'}")
    assert passed, f"criterion {number} failed: {description}"


@pytest.fixture(scope="module")
def burkhardt():
    return load_bundle(str(CORPUS / "burkhardt_x0.json")).descriptor


@pytest.fixture(scope="module")
def burkhardt_x_p1():
    return load_bundle(str(CORPUS / "burkhardt_times_p1.json")).descriptor


def test_criterion_1_burkhardt_quartic(burkhardt):
    ok = (
        closed_form_h(burkhardt, 1, 1) == 16
        and stringy_hodge_table(burkhardt).h_st(1, 1) == 16
        and a_pq(burkhardt, 2, 2) == -29
    )
    _report(1, "Burkhardt quartic: h^{1,1}_st = 16, a_{2,2} = -29", ok)


def test_criterion_2_burkhardt_times_p1(burkhardt, burkhardt_x_p1):
    # closed-form path, via the product construction
    prod = product_stringy(burkhardt, projective_space(1))
    closed_ok = (
        a_pq(prod, 2, 2) == -13
        and h22st_fourfold(prod) == 32
        and a_pq(burkhardt_x_p1, 2, 2) == -13
        and h22st_fourfold(burkhardt_x_p1) == 32
    )
    # independent path: coefficient of (uv)^2 in the series expansion
    series_ok = stringy_hodge_table(burkhardt_x_p1).h_st(2, 2) == 32
    _report(2, "Burkhardt x P1: a_{2,2} = -13, h^{2,2}_st = 32 both ways",
            closed_ok and series_ok)


def test_criterion_3_crepant_invariance():
    blowup = load_bundle(str(CORPUS / "node3fold_blowup.json")).descriptor
    small = load_bundle(str(CORPUS / "node3fold_small.json")).descriptor
    wrong = load_bundle(str(CORPUS / "node3fold_wrong_discrepancy.json")).descriptor
    ok = crepant_compare(blowup, small) and not crepant_compare(wrong, small)
    _report(3, "crepant invariance of the node threefold + negative control", ok)


def test_criterion_4_identity_suite():
    rng = random.Random(20260823)
    failures = 0
    for _ in range(200):
        d = random_descriptor(rng)
        if not check_symmetry(d) or check_pd_identity(d) is not True:
            failures += 1
    _report(4, f"u<->v symmetry and duality identity on 200 random descriptors "
               f"({failures} failures)", failures == 0)


def test_criterion_5_closed_form_vs_expansion():
    rng = random.Random(20260824)
    ok = True
    for _ in range(200):
        d = random_descriptor(rng, min_discrepancy=1)
        table = stringy_hodge_table(d, bound=2 * d.n + 2)
        for p in range(2 * d.n + 1):
            if table.h_st(p, 1) != closed_form_h(d, p, 1):
                ok = False
            if table.h_st(p, 2) != closed_form_h(d, p, 2):
                ok = False
    _report(5, "closed forms for h^{p,1}_st and h^{p,2}_st equal expansion "
               "coefficients on 200 random terminal descriptors", ok)


def test_criterion_6_polynomial_case_structure():
    rng = random.Random(20260825)
    shipped = [
        load_bundle(str(path)).descriptor for path in sorted(CORPUS.glob("*.json"))
    ]
    randoms = [random_descriptor(rng) for _ in range(100)]
    ok = True
    checked = 0
    for d in shipped + randoms:
        poly = exact_divide_test(stringy_e(d))
        if poly is None:
            continue
        checked += 1
        n = d.n
        if poly.total_degree() != 2 * n:
            ok = False
        for (p, q), c in poly.terms.items():
            if not (0 <= p <= n and 0 <= q <= n) or c != poly.coeff(n - p, n - q):
                ok = False
    _report(6, f"polynomial stringy E-functions have degree 2n and dual "
               f"coefficients ({checked} polynomial cases)", ok and checked > 0)


def test_criterion_7_snc_weights():
    triangle = load_bundle(str(CORPUS / "triangle_snc.json")).snc
    chain = load_bundle(str(CORPUS / "chain_snc.json")).snc
    base_ok = (
        weight_graded_dims(triangle, 0, 1, 0, 0) == 1
        and weight_graded_dims(chain, 0, 1, 0, 0) == 0
    )
    # oracle sweep over random dual complexes with up to 8 components
    rng = random.Random(20260826)
    oracle_ok = True
    for _ in range(40):
        n = rng.randint(1, 8)
        ids = [f"V{i}" for i in range(n)]
        pairs = list(itertools.combinations(ids, 2))
        edges = rng.sample(pairs, min(len(pairs), rng.randint(0, 10)))
        edge_set = {tuple(sorted(e)) for e in edges}
        triples = [
            t for t in itertools.combinations(ids, 3)
            if all(tuple(sorted(p)) in edge_set for p in itertools.combinations(t, 2))
        ]
        faces = list(edges) + rng.sample(triples, min(len(triples), 3))
        cx = complex_from_faces(ids, faces)
        for l in range(3):
            if weight_graded_dims(cx, 0, l, 0, 0) != brute_force_cohomology(ids, faces, l):
                oracle_ok = False
    _report(7, "SNC weights: triangle = 1, chain = 0, brute-force simplicial "
               "oracle agreement on dual complexes with <= 8 components",
            base_ok and oracle_ok)


def test_criterion_8_local_defect_and_threefold_difference():
    node = load_bundle(str(CORPUS / "fiber_node.json"))
    fiber = node.fibers[0]
    fiber_ok = local_defect(fiber) == 1 and defect_bound_check(fiber)
    rng = random.Random(20260827)
    corpus3 = [
        d
        for d in (
            load_bundle(str(path)).descriptor for path in sorted(CORPUS.glob("*.json"))
        )
        if d.n == 3 and all(a >= 1 for _, a in d.components)
    ] + [random_descriptor(rng, min_discrepancy=1, max_dim=3) for _ in range(100)]
    corpus3 = [d for d in corpus3 if d.n == 3]
    expansion_ok = True
    poly_ok = True
    for d in corpus3:
        table = stringy_hodge_table(d, bound=6)
        if threefold_h22_minus_h11(d) != table.h_st(2, 2) - table.h_st(1, 1):
            expansion_ok = False
        if table.polynomial is not None and threefold_h22_minus_h11(d) != 0:
            poly_ok = False
    _report(8, f"node fiber sigma = 1 within the discrepancy-1 bound; "
               f"h^{{2,2}}_st - h^{{1,1}}_st matches expansion on {len(corpus3)} "
               f"threefolds and vanishes in every polynomial case",
            fiber_ok and expansion_ok and poly_ok)


def test_always_on_negativity_detector():
    # the synthetic fourfold whose discrepancy-free part alone is negative
    d = load_bundle(str(CORPUS / "synthetic_negative_fourfold.json")).descriptor
    report = conjecture_report(d)
    ok = (
        not report.all_nonnegative()
        and report.verdicts[(2, 2)] == "negative"
        and report.negative_details[(2, 2)]["a_pq"] == -4
    )
    _report("8+", "nonnegativity detector fires on the synthetic fourfold", ok)
