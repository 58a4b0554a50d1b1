"""Acceptance criteria AC1-AC11 at their stated bounds.

Every check is exact. One PASS/FAIL line per criterion is printed in the
pytest terminal summary, and also when this file is run as a script.
"""

import pytest

from parabolic.verify import SuiteConfig, run_suite

# criterion -> (suites, bounds, time budget in seconds)
CRITERIA = {
    "AC1": (["hom-equivalence"], dict(n=3, max=3), 60),
    "AC2": (["hilbert-ad"], dict(n=3, N=6), 10),
    "AC3": (["kernel-formula"], dict(n=3, max=3), 120),
    "AC4": (["f-sigma"], dict(n=2, max=3), 120),
    "AC5": (["day-convolution"], dict(n=3, max=4), 30),
    "AC6": (["ideal-lattice", "prime-chain"], dict(n=3, max=3), 30),
    "AC7": (["characters"], dict(max=6), 60),
    "AC8": (["free-rank"], dict(n=3, N=6, max=1), 30),
    "AC9": (["multiplicativity"], dict(n=2, max=3, seed=0), 60),
    "AC10": (["dominance"], dict(n=3, max=4), 30),
    "AC11": (["phi-d"], dict(n=3, max=3), 30),
}

RESULTS: dict[str, str] = {}


def evaluate(criterion: str) -> tuple[bool, str]:
    suites, bounds, budget = CRITERIA[criterion]
    reports = [run_suite(name, SuiteConfig(**bounds)) for name in suites]
    elapsed = sum(r.elapsed for r in reports)
    checks = [c for r in reports for c in r.checks]
    failed = [c for c in checks if not c.passed]
    ok = not failed and elapsed < budget
    cases = sum(c.cases for c in checks)
    line = f"{criterion} {'PASS' if ok else 'FAIL'}: {', '.join(suites)}; {len(checks)} identities, {cases} cases, {elapsed:.1f}s (budget {budget}s)"
    for c in failed:
        line += f"\n    failed: {c.identity}: {c.failures}"
    if elapsed >= budget:
        line += "\n    over the time budget"
    return ok, line


@pytest.mark.slow
@pytest.mark.parametrize("criterion", list(CRITERIA))
def test_acceptance(criterion):
    ok, line = evaluate(criterion)
    RESULTS[criterion] = line
    print(line)
    assert ok, line


if __name__ == "__main__":
    import sys

    all_ok = True
    for criterion in CRITERIA:
        ok, line = evaluate(criterion)
        all_ok &= ok
        print(line, flush=True)
    sys.exit(0 if all_ok else 1)
