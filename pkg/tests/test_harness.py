import json

import pytest

from functidist.automorphism import all_automorphisms
from functidist.distinguishing import dist_oracle
from functidist.functigraph import build_functigraph
from functidist.graph import complete, path, star
from functidist.harness import (
    CLAIM_IDS,
    FAIL,
    PASS,
    PROFILES,
    SUITES,
    ClaimCheck,
    config_for,
    failures,
    report_lines,
    run_suites,
    summary_table,
    trichotomy_case,
)


@pytest.fixture(scope="module")
def ci_checks():
    return run_suites(["all"], config_for("ci"))


def test_profiles():
    assert set(PROFILES) == {"ci", "desk", "full"}
    assert config_for("ci", max_nodes=5).max_nodes == 5
    with pytest.raises(ValueError):
        config_for("huge")


def test_every_claim_is_exercised(ci_checks):
    seen = {c.claim for c in ci_checks}
    assert seen == set(CLAIM_IDS)


def test_verdict_vocabulary(ci_checks):
    assert {c.verdict for c in ci_checks} <= {"pass", "fail", "out-of-budget"}


def test_report_is_deterministic(ci_checks):
    again = run_suites(["all"], config_for("ci"))
    assert report_lines(again) == report_lines(ci_checks)
    header = json.loads(report_lines(ci_checks)[0])["header"]
    assert header["checks"] == len(ci_checks)


def test_report_order(ci_checks):
    order = [CLAIM_IDS.index(c.claim) for c in ci_checks]
    assert order == sorted(order)


def test_unknown_suite():
    with pytest.raises(KeyError):
        run_suites(["nope"], config_for("ci"))


def test_failures_are_confirmed_counterexamples(ci_checks):
    """Every failing instance is rechecked here by the oracle."""
    bad = failures(ci_checks)
    assert {c.claim for c in bad} == {
        "functigraph-bounds-sharp",
        "twin-set-functigraph",
        "constant-map-dominates",
        "complete-bijective",
    }
    # K4 with a bijection needs 3 colors, not psi(4) = 2
    F = build_functigraph(complete(4), (0, 1, 2, 3)).composite
    assert dist_oracle(F) == 3
    # a literal P3 map with u1, u2 -> v1 and u3 -> v3 has a non-trivial automorphism
    F = build_functigraph(path(3), (0, 0, 2)).composite
    assert len(all_automorphisms(F)) == 2 and dist_oracle(F) == 2
    # the star K_{1,3}: Dist = 3 = largest twin set, yet one functigraph needs 4
    F = build_functigraph(star(3), (1, 0, 0, 0)).composite
    assert dist_oracle(star(3)) == 3 and dist_oracle(F) == 4
    # K2: the identity map gives C4 with Dist 3, above the constant-map value 2
    F = build_functigraph(path(2), (0, 1)).composite
    assert dist_oracle(F) == 3 > dist_oracle(build_functigraph(path(2), (0, 0)).composite)


def test_passing_suites_are_clean(ci_checks):
    for claim in (
        "functigraph-bounds",
        "constant-map",
        "twin-set-bound",
        "twin-stem-bound",
        "stems-equal",
        "stems-sum",
        "stems-difference",
        "complete-singleton-fibers",
        "complete-trichotomy",
        "fiber-class-reduction",
        "complete-minus-matching",
        "join-lower-bound",
        "path-join-dist",
        "path-join-functigraph",
    ):
        rows = [c for c in ci_checks if c.claim == claim]
        assert rows and all(c.verdict == PASS for c in rows), claim


def test_lower_bound_alt_fixture(ci_checks):
    rows = {c.instance: c for c in ci_checks if c.claim == "functigraph-bounds-sharp"}
    alt = [c for k, c in rows.items() if "lower-alt" in k]
    upper = [c for k, c in rows.items() if "bound=upper" in k]
    assert alt[0].verdict == PASS and alt[0].computed == 1
    assert upper[0].verdict == PASS and upper[0].computed == 2


@pytest.mark.parametrize(
    "n, s, l, case",
    [(4, 2, 3, "1"), (4, 3, 2, "2"), (6, 2, 3, "3"), (6, 3, 3, "4"), (5, 3, 2, "5a"), (6, 4, 2, "5a"), (6, 5, 2, "2"), (7, 5, 2, "5b")],
)
def test_trichotomy_cases(n, s, l, case):
    assert trichotomy_case(n, s, l) == case


def test_summary_table():
    checks = [
        ClaimCheck("a", "x", 1, 1, PASS),
        ClaimCheck("a", "y", 1, 2, FAIL),
        ClaimCheck("b", "x", 1, None, "out-of-budget"),
    ]
    text = summary_table(checks)
    assert text.splitlines()[1].split() == ["a", "1", "1", "0"]
    assert text.splitlines()[2].split() == ["b", "0", "0", "1"]


def test_suite_registry_covers_ids():
    cfg = config_for("ci")
    produced = set()
    for name in SUITES:
        produced |= {c.claim for c in run_suites([name], cfg)}
    assert produced == set(CLAIM_IDS)
