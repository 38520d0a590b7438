"""Exhaustive finite-range checks of the structural statements behind the argument.

Each suite returns a :class:`SuiteReport`; the first failure is kept as a
counterexample with enough context to reproduce it.  Suites never prove
anything beyond their ranges.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

from ..coeffs import d2_closed, d_cell, d_eval, periodic_ratio, u_at
from ..decomp import b_table, decompose, enumerate_decompositions, max_l, row_start, window
from ..fq import pow_int
from ..lseries import Params, series_alpha, series_L_direct, series_Pi, series_star
from ..qwords import block_value
from .dfao import repunit_rows, row_set_stats, thue_morse
from .periodicity import stable_preperiod


class UnknownSuiteError(KeyError):
    pass


class _Failure(Exception):
    def __init__(self, **context):
        super().__init__(context)
        self.context = context


def _require(cond: bool, **context):
    if not cond:
        raise _Failure(**context)


@dataclass
class SuiteReport:
    suite: str
    params: dict
    range: dict
    passed: bool
    counterexample: dict | None = None
    details: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "params": self.params,
            "range": self.range,
            "pass": self.passed,
            "counterexample": self.counterexample,
            "details": self.details,
        }

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = f"{status} {self.suite} {self.params}"
        if self.counterexample:
            line += f" counterexample={self.counterexample}"
        return line


@dataclass(frozen=True)
class Suite:
    name: str
    run: Callable[..., dict]
    defaults: Callable[[Params], dict]
    uses_a: bool = True


SUITES: dict[str, Suite] = {}


def _suite(name: str, defaults: Callable[[Params], dict], uses_a: bool = True):
    def register(fn):
        SUITES[name] = Suite(name, fn, defaults, uses_a)
        return fn

    return register


def _default_b_max(q: int) -> int:
    b = q
    while b * q <= 1000:
        b *= q
    return b


def _series_prec(q: int) -> int:
    return {3: 3**8, 4: 4**5, 5: 5**5}.get(q, q**4)


def _bridge_prec(q: int) -> int:
    return {3: 3**9, 4: 4**5, 5: 5**5}.get(q, q**4)


# decomposition structure


@_suite("lemma-ep", lambda P: {"l_max": 10, "b_max": _default_b_max(P.q)}, uses_a=False)
def _lemma_ep(params: Params, l_max: int, b_max: int) -> dict:
    q = params.q
    for l in range(0, 13):
        _require(window(l + 1, params)[0] > window(l, params)[1], check="windows disjoint", l=l)
    for k in range(1, l_max + 1):
        for l in range(k, l_max + 1):
            lhs = block_value(1, k, 1, q) + sum(q**j - 1 for j in range(k + 1, l + 1))
            _require(lhs < q ** (l + 1) - 1, check="sum bound", k=k, l=l, lhs=lhs)
    for b in range(b_max + 1):
        dec = decompose(b, params)
        chain = dec.chain
        _require(all(x > y for x, y in zip(chain, chain[1:])), check="chain decreasing", b=b, chain=chain)
        for i, l in enumerate(dec.lvals):
            _require(max_l(chain[i], q) == l, check="greedy maximality", b=b, position=i + 1)
            _require(chain[i + 1] == chain[i] - (q**l - 1), check="reconstruction", b=b, position=i + 1)
        greedy = set(dec.decompositions())
        brute = enumerate_decompositions(b, params)
        _require(greedy == brute, check="all decompositions found", b=b,
                 missing=sorted(brute - greedy), spurious=sorted(greedy - brute))
        for r, k, E in greedy:
            if E:
                _require(E[0] == max_l(b, q), check="largest exponent", b=b, E=E)
    return {}


def _lemma_b_ranges(P: Params) -> dict:
    return {"js": [2, 3], "extra_rows": 6}


@_suite("lemma-b", _lemma_b_ranges, uses_a=False)
def _lemma_b(params: Params, js: list[int], extra_rows: int) -> dict:
    q = params.q
    checked = 0
    for j in js:
        top = q ** (j - 1)
        m_hi = top + extra_rows
        t = b_table(j, params, m_hi + 1)
        for n in range(1, top + 2):
            for m in range(max(n - 1, 1), m_hi + 1):
                b0, b1 = t.b(m, n), t.b(m + 1, n)
                _require(b0 is not None and b1 is not None and b1 == b0 + q ** (j + m + 1 - n),
                         check="row shift P", j=j, m=m, n=n, b=b0, b_next=b1)
                checked += 1
        for n in range(1, top + 1):
            for m in range(n, m_hi + 1):
                l = max_l(t.b(m, n), q)
                _require(l == j + m - n, check="exponent Q", j=j, m=m, n=n, l=l)
                _require(t.l(m, n) == l and t.b(m, n + 1) == t.b(m, n) - (q**l - 1),
                         check="step Q", j=j, m=m, n=n)
                checked += 1
            for m in range(max(n - 1, 1), m_hi + 1):
                _require(t.b(m + 1, n + 1) == t.b(m, n) + 1, check="diagonal R", j=j, m=m, n=n)
                checked += 1
    return {"checked": checked}


@_suite("coro-ls", _lemma_b_ranges, uses_a=False)
def _coro_window(params: Params, js: list[int], extra_rows: int) -> dict:
    q = params.q
    checked = 0
    for j in js:
        top = q ** (j - 1)
        m_hi = top + extra_rows
        t = b_table(j, params, m_hi)
        for n in range(1, top + 2):
            for m in range(n, m_hi + 1):
                lo, hi = window(j + m - n, params)
                b = t.b(m, n)
                _require(b is not None and lo <= b <= hi, check="window", j=j, m=m, n=n, b=b, window=(lo, hi))
                checked += 1
    return {"checked": checked}


@_suite("lemma-end", lambda P: {"j": 2, "m_max": P.q**2 + 4}, uses_a=False)
def _lemma_end(params: Params, j: int, m_max: int) -> dict:
    q = params.q
    big = b_table(j + 1, params, m_max)
    small = b_table(j, params, m_max)
    checked = 0
    for m in range(q**j, m_max + 1):
        width = max(big.width, small.width) + q**j
        for n in range(q**j + 1, width + 1):
            lhs = big.b(m, n)
            rhs = small.b(m - q**j + 1, n - q**j)
            _require(lhs == rhs, check="tail copy", j=j, m=m, n=n, big=lhs, small=rhs)
            checked += 1
    return {"checked": checked}


# coefficients


@_suite("lemma-periodic", lambda P: {"js": [2, 3], "m_max": 12})
def _lemma_periodic(params: Params, js: list[int], m_max: int) -> dict:
    ratio = periodic_ratio(params)
    checked = 0
    for j in js:
        for n in range(1, params.q ** (j - 1) + 2):
            for m in range(n, m_max):
                cur = d_eval(d_cell(j, m, n, params), params)
                nxt = d_eval(d_cell(j, m + 1, n, params), params)
                _require(nxt == ratio * cur, check="column ratio", j=j, m=m, n=n, d=cur.literal, d_next=nxt.literal)
                checked += 1
    return {"checked": checked}


@_suite("lemma-j2", lambda P: {"m_max": 12, "n_max": P.q + 3}, uses_a=False)
def _lemma_j2(params: Params, m_max: int, n_max: int) -> dict:
    q = params.q
    field_elems = list(params.ctx.elements())
    for m in range(1, m_max + 1):
        for n in range(1, n_max + 1):
            closed = d2_closed(m, n, params)
            computed = d_cell(2, m, n, params)
            _require(closed.same_as(computed, q), check="closed form", m=m, n=n,
                     closed=closed.to_json(), computed=computed.to_json())
            for a in field_elems:
                pa = params.with_a(a)
                _require(d_eval(closed, pa) == d_eval(computed, pa), check="evaluation", m=m, n=n, a=a.literal)
    return {}


# periodicity


def _bound_case(params: Params) -> str:
    a, s = params.a, params.s
    degenerate = (params.ctx.one - params.ctx(s) * pow_int(a, s - 1)).is_zero()
    return "degenerate (1 - s a^(s-1) = 0, q = 3)" if degenerate and params.q == 3 else "generic"


@_suite("lemma-fin", lambda P: {"j": 3})
def _lemma_fin(params: Params, j: int) -> dict:
    report = stable_preperiod(j, params)
    bound = params.q ** (j - 1)
    _require(report.conclusive, check="conclusive", report=report.to_json())
    _require(report.preperiod >= bound, check="preperiod bound", bound=bound, report=report.to_json())
    return {"case": _bound_case(params), "preperiod": report.preperiod, "period": report.period, "bound": bound}


@_suite("prop-key", lambda P: {"js": [2, 3, 4] if P.q == 3 else [2, 3]})
def _prop_key(params: Params, js: list[int]) -> dict:
    q = params.q
    pre = {}
    for j in js:
        report = stable_preperiod(j, params)
        _require(report.conclusive, check="conclusive", j=j, report=report.to_json())
        pre[j] = report.preperiod
    for j, j2 in zip(js, js[1:]):
        _require(pre[j2] > pre[j], check="strictly increasing", preperiods=pre)
        if j2 == j + 1:
            floor = q**j - 1 + pre[j] - 1
            _require(pre[j2] >= floor, check="shift law", j=j, floor=floor, preperiods=pre)
    return {"preperiods": pre}


def _finite_ranges(P: Params) -> dict:
    j_maxes = [2, 3, 4, 5] if P.q == 3 else [2, 3, 4]
    # rows must run past the preperiod of the last one to tell it apart
    return {"tm_j_max": 16, "tm_n_max": 20, "j_maxes": j_maxes, "n_max": max(30, P.q ** (j_maxes[-1] - 1) + 2 * P.q)}


@_suite("lemma-finite", _finite_ranges)
def _lemma_finite(params: Params, tm_j_max: int, tm_n_max: int, j_maxes: list[int], n_max: int) -> dict:
    tm = thue_morse()
    tm_rows = row_set_stats(repunit_rows(tm, 2), tm_j_max, tm_n_max)
    _require(tm_rows <= len(tm.states), check="automaton bound", rows=tm_rows, states=len(tm.states))
    q = params.q

    def u_rows(j: int, n: int) -> list:
        return [u_at(row_start(j, m, q), params) for m in range(1, n + 1)]

    counts = [row_set_stats(u_rows, jm, n_max) for jm in j_maxes]
    _require(all(x < y for x, y in zip(counts, counts[1:])), check="row count grows", counts=counts)
    return {"thue_morse_rows": tm_rows, "row_counts": dict(zip(j_maxes, counts))}


# series


@_suite("star-identity", lambda P: {"prec": _series_prec(P.q)})
def _star_identity(params: Params, prec: int) -> dict:
    lhs = series_Pi(params, prec) * series_star(params, prec)
    rhs = series_alpha(params, prec) * series_L_direct(params, prec)
    idx = lhs.first_difference(rhs)
    _require(idx is None, check="Pi * star == alpha * L", index=idx,
             lhs=None if idx is None else lhs[idx].literal, rhs=None if idx is None else rhs[idx].literal)
    return {}


@_suite("coeff-bridge", lambda P: {"prec": _bridge_prec(P.q), "all_b": True})
def _coeff_bridge(params: Params, prec: int, all_b: bool) -> dict:
    q = params.q
    star = series_star(params, prec)
    if all_b:
        targets = range(prec)
    else:
        targets = sorted({row_start(j, m, q) for j in range(1, prec.bit_length())
                          for m in range(1, prec.bit_length()) if row_start(j, m, q) < prec})
    n = 0
    for b in targets:
        via_chain = u_at(b, params)
        _require(via_chain == star[b], check="u(b) == coefficient", b=b, chain=via_chain.literal, series=star[b].literal)
        n += 1
    return {"checked": n}


def verify_suite(name: str, params: Params, ranges: dict | None = None) -> SuiteReport:
    try:
        suite = SUITES[name]
    except KeyError:
        raise UnknownSuiteError(name) from None
    rng = suite.defaults(params)
    if ranges:
        unknown = set(ranges) - set(rng)
        if unknown:
            raise ValueError(f"suite {name} has no range options {sorted(unknown)}")
        rng.update(ranges)
    shown = params.describe()
    if not suite.uses_a:
        shown.pop("a")
    try:
        details = suite.run(params, **rng)
    except _Failure as fail:
        return SuiteReport(name, shown, rng, False, fail.context)
    return SuiteReport(name, shown, rng, True, None, details)


def run_suites(names: list[str], params: Params, every_a: bool = False, jobs: int = 1) -> list[SuiteReport]:
    """Run suites in the given order; with ``every_a`` the a-dependent ones loop over F_q.

    With ``jobs > 1`` the runs go to a process pool; reports keep the same order.
    """
    for name in names:
        if name not in SUITES:
            raise UnknownSuiteError(name)
    tasks = []
    for name in names:
        if every_a and SUITES[name].uses_a:
            tasks += [(name, params.with_a(a)) for a in params.ctx.elements()]
        else:
            tasks.append((name, params))
    if jobs <= 1 or len(tasks) < 2:
        return [verify_suite(name, P) for name, P in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(verify_suite, *zip(*tasks)))
