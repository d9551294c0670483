"""Acceptance criteria, one test each, at full corpus sizes.

Each test runs the matching reproduction check(s) and records a
``criterion N <name>: PASS|FAIL|UNDECIDED`` line; the lines are printed
together at the end of the session.
"""

import pytest

from oneplanar import verify

CRITERIA = [
    (1, "optimal baseline", ["optimal-baseline"]),
    (2, "crossing-count identity", ["lem-c-identity"]),
    (3, "odd-face parity", ["odd-parity"]),
    (4, "merging arithmetic", ["merge-arithmetic"]),
    (5, "quasi-optimal recognition and decomposition", ["quasi-recognition"]),
    (6, "degree-based bound counterexample", ["degree-bound-counterexample"]),
    (7, "oracle exactness", ["oracle-exactness"]),
    (8, "seven-vertex corollary", ["croa-cr5", "croa-one-planarity", "census7"]),
    (9, "quasi-optimal drawings are maximal", ["quasi-maximal"]),
    (10, "bounds soundness", ["bounds-soundness"]),
    (11, "format round-trip", ["format-roundtrip"]),
]

LINES: list[str] = []


@pytest.fixture(scope="module")
def ctx():
    return verify.Context(verify.Settings())


@pytest.mark.parametrize("number, title, checks", CRITERIA, ids=[f"criterion-{c[0]}" for c in CRITERIA])
def test_criterion(ctx, number, title, checks):
    results = [verify.run_check(name, ctx) for name in checks]
    status = next((r.status for r in results if r.status != verify.PASS), verify.PASS)
    detail = "; ".join(r.line() for r in results)
    line = f"criterion {number} {title}: {status}  [{detail}]"
    LINES.append(line)
    print(line)
    assert status == verify.PASS, detail
