"""Acceptance gate: one test (and one printed pass/fail line) per criterion.

Criterion 1 asserts every golden-example check as stated, including the
diff-of-unc "adds exactly {(-x-y, -xy)}" claim.  That claim is arithmetically
false: lifting -xy above x-y also flips the (x-y, -xy) comparison, so the
diff gains three pairs, not one.  The check is kept as stated and this test
is expected to stay red; the corrected containment property (the diff of unc
strictly contains the diff of nat and the named pair) is asserted separately
and passes.
"""

import math
import time

from condrev.verify import (
    golden_examples_suite,
    named_counterexamples_suite,
    run_suite,
)


def _report(criterion, results, elapsed, budget=math.inf):
    ok = all(r.ok for r in results) and elapsed < budget
    status = "PASS" if ok else "FAIL"
    within = f"{elapsed:.1f}s of {budget:.0f}s budget" if budget < math.inf else (
        f"{elapsed:.1f}s"
    )
    print(f"{status}  criterion {criterion}  "
          f"({sum(r.ok for r in results)}/{len(results)} checks, {within})")
    for r in results:
        if not r.ok:
            print(f"      {r.line()}")
    return ok


def test_criterion_1_golden_examples():
    start = time.monotonic()
    results = golden_examples_suite()
    elapsed = time.monotonic() - start
    golden = [r for r in results if "strictly contains" not in r.name]
    assert len(golden) == 5
    assert _report(1, golden, elapsed, budget=1.0)


def test_criterion_1_corrected_diff_containment():
    containment = [
        r for r in golden_examples_suite() if "strictly contains" in r.name
    ]
    assert len(containment) == 1 and containment[0].ok


def test_criterion_2_exhaustive_n2_suite():
    start = time.monotonic()
    results = run_suite("n2-exhaustive")
    elapsed = time.monotonic() - start
    assert len(results) == 15
    assert _report(2, results, elapsed, budget=60.0)


def test_criterion_3_named_counterexamples():
    start = time.monotonic()
    results = named_counterexamples_suite()
    elapsed = time.monotonic() - start
    assert len(results) == 7
    assert _report(3, results, elapsed)


def test_criterion_4_oracle_self_check_and_sampled_n3():
    start = time.monotonic()
    results = run_suite("n3-sampled", seed=0, samples=500)
    elapsed = time.monotonic() - start
    counts = [r for r in results if r.name.startswith("enumeration count")]
    assert [r.detail for r in counts] == ["counted 3", "counted 75",
                                          "counted 545835"]
    assert _report(4, results, elapsed, budget=600.0)
