"""Acceptance suite: one test per criterion, each at its exact tolerance.

Every criterion runs through the same check producers the verify-all
command uses; this module times each one against its stated budget and
prints a pass/fail line per criterion. All comparisons are exact
(rational arithmetic); there are no tolerances to tune.
"""

import time

from cohiggs.checks import CRITERIA, run_criterion

_RESULTS = {}


def _run(number):
    if number not in _RESULTS:
        crit = next(c for c in CRITERIA if c[0] == number)
        start = time.perf_counter()
        checks = run_criterion(number, seed=0)
        elapsed = time.perf_counter() - start
        _RESULTS[number] = (crit, checks, elapsed)
    return _RESULTS[number]


def _assert_criterion(number):
    (num, description, budget, _), checks, elapsed = _run(number)
    failing = [c for c in checks if c.status != "pass"]
    verdict = "PASS" if not failing else "FAIL"
    print(f"criterion {num:02d} [{verdict}] {description} ({elapsed:.2f}s / {budget:.0f}s)")
    for c in failing:
        print(f"  failing: {c.id}: computed {c.computed!r}, expected {c.expected!r}")
    assert not failing, f"criterion {num} failed: {[c.id for c in failing]}"
    assert elapsed < budget, f"criterion {num} exceeded its {budget}s budget ({elapsed:.2f}s)"


def test_criterion_01_table_k3():
    _assert_criterion(1)
    checks = _run(1)[1]
    assert checks[0].computed == ((0, 5, 0), (1, 0, 0), (10, 0, 0), (8, 0, 0), (22, 0, 0))


def test_criterion_02_tables_k4_to_k12():
    _assert_criterion(2)
    assert len(_run(2)[1]) == 9


def test_criterion_03_cover_chase_ledger():
    _assert_criterion(3)
    check = _run(3)[1][0]
    assert check.computed == (11, 5, 16, 8, 0, 3, 8, 3)


def test_criterion_04_chi_identities():
    _assert_criterion(4)


def test_criterion_05_section_dims():
    _assert_criterion(5)
    by_id = {c.id: c for c in _run(5)[1]}
    assert by_id["c05-dim-t-minus1"].computed[0] == 3
    assert by_id["c05-dim-t0"].computed[0] == 8
    assert by_id["c05-dim-sym2"].computed[0] == 27
    assert by_id["c05-dim-endot"].computed == (0, (0, 0, 0), 6, (6, 0, 0))
    assert by_id["c05-dim-endot-tensor"].computed == (18, 18, 18)


def test_criterion_06_solver():
    _assert_criterion(6)


def test_criterion_07_normal_forms_orbits():
    _assert_criterion(7)


def test_criterion_08_tangent_structure():
    _assert_criterion(8)


def test_criterion_09_deformation_dimensions():
    _assert_criterion(9)


def test_criterion_10_chern_coverage():
    _assert_criterion(10)


def test_criterion_11_property_suites():
    _assert_criterion(11)


def test_criterion_12_negative_gates():
    _assert_criterion(12)


def test_total_runtime_within_target():
    # all criteria must have run; the stated overall target is 2 minutes
    for number in range(1, 13):
        _run(number)
    total = sum(elapsed for _, _, elapsed in _RESULTS.values())
    print(f"acceptance total: {total:.2f}s (target 120s)")
    assert total < 120.0
