import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from autotrans.analysis import (
    SUITES,
    Dfao,
    UnknownSuiteError,
    brute_force_preperiod,
    dfao_eval,
    find_preperiod,
    in_of_row,
    repunit_rows,
    row_set_stats,
    run_suites,
    stable_preperiod,
    thue_morse,
    u_row,
    verify_suite,
)
from autotrans.coeffs import u_at
from autotrans.decomp import row_start
from autotrans.lseries import make_params


def test_find_preperiod_examples():
    r = find_preperiod((1, 2, 0, 0, 0, 0, 0, 0, 0, 0))
    assert (r.preperiod, r.period, r.conclusive) == (3, 1, True)
    r = find_preperiod((0,) * 8)
    assert (r.preperiod, r.period) == (1, 1)
    r = find_preperiod((5, 3, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2))
    assert (r.preperiod, r.period) == (3, 2)
    assert not find_preperiod((1, 2, 3, 4, 5)).conclusive
    with pytest.raises(ValueError):
        find_preperiod(())


@settings(max_examples=1000)
@given(st.lists(st.integers(0, 2), min_size=1, max_size=12),
       st.lists(st.integers(0, 2), min_size=1, max_size=5),
       st.integers(0, 30))
def test_find_preperiod_matches_brute_force(prefix, cycle, reps):
    seq = prefix + cycle * reps
    r = find_preperiod(seq)
    expected = brute_force_preperiod(seq)
    if expected is None:
        assert not r.conclusive
    else:
        assert (r.preperiod, r.period) == expected
        z, t = r.preperiod - 1, r.period
        assert all(seq[i] == seq[i + t] for i in range(z, len(seq) - t))


def test_u_row_examples():
    P = make_params(3, 2, 0)
    assert u_row(2, P, 6) == [P.ctx(c) for c in (1, 2, 0, 0, 0, 0)]
    assert all(x.is_zero() for x in u_row(2, P.with_a(P.ctx(2)), 20))
    for q, s in [(3, 2), (5, 3)]:
        Q = make_params(q, s, 1)
        assert u_row(1, Q, 1) == [u_at(q, Q)]
    with pytest.raises(ValueError):
        u_row(2, P, 0)


def test_in_of_row_examples():
    P = make_params(3, 2, 0)
    assert in_of_row(2, P, 30).preperiod == 3
    assert stable_preperiod(3, P.with_a(P.ctx(1))).preperiod >= 9
    assert stable_preperiod(3, P).preperiod > stable_preperiod(2, P).preperiod


@pytest.mark.parametrize("a,expected", [(0, {2: 3, 3: 11, 4: 37}), (1, {2: 2, 3: 10, 4: 36}), (2, {2: 1, 3: 9, 4: 35})])
def test_preperiods_q3(a, expected):
    P = make_params(3, 2, a)
    got = {j: stable_preperiod(j, P) for j in expected}
    assert all(r.conclusive for r in got.values())
    assert {j: r.preperiod for j, r in got.items()} == expected


def test_escalation_gives_up_inconclusively():
    P = make_params(3, 2, 0)
    r = stable_preperiod(4, P, m_start=10, cap=20)
    assert not r.conclusive and r.observed == 20


def test_dfao_examples():
    tm = thue_morse()
    assert dfao_eval(tm, 3) == 0
    assert dfao_eval(tm, 6) == 0
    assert dfao_eval(tm, 0) == tm.tau[tm.initial]
    with pytest.raises(ValueError):
        Dfao(2, {(0, 0): 0}, 0, {0: 0})


@given(st.integers(0, 10**12))
def test_thue_morse_is_popcount_parity(n):
    assert dfao_eval(thue_morse(), n) == bin(n).count("1") % 2


@given(st.integers(0, 10**6))
def test_most_significant_first_reading(n):
    # Thue-Morse reads the same in both directions, a counting automaton does not
    delta = {(c, d): (c + d) % 3 for c in range(3) for d in range(2)}
    lsd = Dfao(2, delta, 0, {c: c for c in range(3)})
    msd = Dfao(2, delta, 0, {c: c for c in range(3)}, lsd_first=False)
    assert lsd(n) == msd(n) == bin(n).count("1") % 3


def test_row_set_stats():
    tm = thue_morse()
    assert row_set_stats(repunit_rows(tm, 2), 16, 20) == 1
    assert row_set_stats(lambda j, n: [7] * n, 10, 10) == 1
    P = make_params(3, 2, 1)

    def rows(j, n):
        return [u_at(row_start(j, m, 3), P) for m in range(1, n + 1)]

    counts = [row_set_stats(rows, jm, 30) for jm in (2, 3, 4, 5)]
    assert all(x < y for x, y in zip(counts, counts[1:]))


def test_suite_registry_and_errors():
    assert set(SUITES) >= {"lemma-ep", "lemma-b", "star-identity", "coeff-bridge", "prop-key", "lemma-finite"}
    P = make_params(3, 2)
    with pytest.raises(UnknownSuiteError):
        verify_suite("bogus", P)
    with pytest.raises(UnknownSuiteError):
        run_suites(["lemma-b", "bogus"], P)
    with pytest.raises(ValueError):
        verify_suite("lemma-b", P, {"nonsense": 1})


def test_suite_reports_counterexample():
    # the bound q^(j-1) fails at j = 2 once the row vanishes identically
    report = verify_suite("lemma-fin", make_params(3, 2, 2), {"j": 2})
    assert not report.passed
    assert report.counterexample["check"] == "preperiod bound"
    doc = json.loads(json.dumps(report.to_json(), default=str))
    assert doc["pass"] is False


@pytest.mark.parametrize("name", ["lemma-ep", "lemma-b", "coro-ls", "lemma-end", "lemma-j2"])
@pytest.mark.parametrize("p,e,s", [(3, 1, 2), (2, 2, 3), (5, 1, 3)])
def test_structural_suites_pass(name, p, e, s):
    assert verify_suite(name, make_params(p, s, e=e)).passed


def test_a_dependent_suites_loop_over_field():
    reports = run_suites(["lemma-periodic", "lemma-b"], make_params(2, 3, e=2), every_a=True)
    assert [r.suite for r in reports] == ["lemma-periodic"] * 4 + ["lemma-b"]
    assert all(r.passed for r in reports)
    assert len({r.params["a"] for r in reports[:4]}) == 4


def test_parallel_runs_keep_order_and_results():
    P = make_params(3, 2)
    names = ["lemma-j2", "lemma-periodic", "lemma-ep"]
    serial = run_suites(names, P, every_a=True)
    parallel = run_suites(names, P, every_a=True, jobs=2)
    assert [r.to_json() for r in parallel] == [r.to_json() for r in serial]
