"""Randomized property suites behind ``lcwis verify``.

Each suite draws its instances from ``random.Random`` seeded with
``"<seed>:<suite>"``, so a run is reproducible from the seed alone.  A suite
stops at its first mismatch and reports the offending instance.
"""

import itertools
import random
from dataclasses import dataclass
from typing import Callable, Optional

from .core import WeightedAlphabet
from .gadgets import (
    GadgetSide,
    and_gadget,
    combine,
    coordinate_gadget,
    expand_weights,
    or_gadget,
    vector_gadget,
)
from .reductions import CnfFormula, maxsat_oracle, maxsat_via_lcwis
from .solvers import lcwis, lcwis_oracle, wlcwis, wlcwis_oracle


@dataclass
class SuiteResult:
    name: str
    passed: int = 0
    failed: int = 0
    counterexample: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.failed == 0


class _Mismatch(Exception):
    pass


def _check(cond: bool, **instance):
    if not cond:
        raise _Mismatch("\n".join(f"{k}={v}" for k, v in instance.items()))


def _seq(rng, max_len, lo, hi, min_len=0):
    return [rng.randint(lo, hi) for _ in range(rng.randint(min_len, max_len))]


def random_cnf(rng, max_vars=8, max_clauses=12) -> CnfFormula:
    n = rng.randint(1, max_vars)
    clauses = []
    for _ in range(rng.randint(1, max_clauses)):
        width = rng.randint(1, min(3, n))
        clauses.append([v if rng.random() < 0.5 else -v for v in rng.sample(range(1, n + 1), width)])
    return CnfFormula(n, clauses)


def _dot(u, v):
    return sum(x * y for x, y in zip(u, v))


def suite_coordinate(rng, trials):
    for x, y, i in itertools.product((0, 1), (0, 1), range(1, 9)):
        g1 = coordinate_gadget(GadgetSide.ONE, x, i)
        g2 = coordinate_gadget(GadgetSide.TWO, y, i)
        expected = 0 if x == y == 1 else 1
        got = lcwis(g1, g2).value
        _check(got == expected, x=x, y=y, i=i, got=got, expected=expected)
        yield


def suite_vector(rng, trials):
    for d in range(1, 5):
        for u in itertools.product((0, 1), repeat=d):
            for v in itertools.product((0, 1), repeat=d):
                got = lcwis(vector_gadget(GadgetSide.ONE, u), vector_gadget(GadgetSide.TWO, v)).value
                _check(got == d - _dot(u, v), u=u, v=v, got=got)
                yield
    for _ in range(trials):
        d = rng.randint(1, 12)
        u = [rng.randint(0, 1) for _ in range(d)]
        v = [rng.randint(0, 1) for _ in range(d)]
        got = lcwis(vector_gadget(GadgetSide.ONE, u), vector_gadget(GadgetSide.TWO, v)).value
        _check(got == d - _dot(u, v), u=u, v=v, got=got)
        yield


def suite_main_lemma(rng, trials):
    for _ in range(trials):
        n = rng.randint(1, 5)
        S = [_seq(rng, 6, 3, 11) for _ in range(n)]
        T = [_seq(rng, 6, 3, 11) for _ in range(n)]
        w = WeightedAlphabet.unit(range(3, 12))
        inst = combine(S, T, w)
        best = max(wlcwis_oracle(s, t, w) for s in S for t in T)
        got = wlcwis(inst.p1, inst.p2, inst.weights).value
        _check(got == best + inst.offset, S=S, T=T, got=got, expected=best + inst.offset)
        _check(
            len(inst.p1) == 2 * n + sum(map(len, S)) + 2 * (n - 1) + 2 * n
            and len(inst.p2) == 4 * n + sum(map(len, T)) + 4 * (n - 1) + 4 * n,
            S=S, T=T, reason="token counts",
        )
        yield


def suite_expansion(rng, trials):
    for _ in range(trials):
        a, b = _seq(rng, 8, 0, 5), _seq(rng, 8, 0, 5)
        w = WeightedAlphabet({s: rng.randint(1, 4) for s in range(6)})
        got = lcwis(expand_weights(a, w), expand_weights(b, w)).value
        expected = wlcwis_oracle(a, b, w)
        _check(got == expected == wlcwis(a, b, w).value, a=a, b=b, w=dict(w), got=got)
        yield


def suite_oracle(rng, trials):
    for _ in range(trials):
        k = rng.randint(1, 5)
        a, b = _seq(rng, 12, 0, k - 1), _seq(rng, 12, 0, k - 1)
        w = WeightedAlphabet({s: rng.randint(1, 5) for s in range(k)})
        v, o = lcwis(a, b).value, lcwis_oracle(a, b)
        _check(v == o == lcwis(b, a).value, a=a, b=b, lcwis=v, oracle=o)
        v, o = wlcwis(a, b, w).value, wlcwis_oracle(a, b, w)
        _check(v == o, a=a, b=b, w=dict(w), wlcwis=v, oracle=o)
        yield


def suite_and_or(rng, trials):
    for _ in range(trials):
        p1 = (_seq(rng, 8, 0, 6), _seq(rng, 8, 0, 6))
        p2 = (_seq(rng, 8, 0, 6), _seq(rng, 8, 0, 6))
        x, y = and_gadget(p1, p2)
        got = lcwis(x, y).value
        expected = lcwis_oracle(*p1) + lcwis_oracle(*p2)
        _check(got == expected, pair1=p1, pair2=p2, got=got, expected=expected)

        pairs = [(_seq(rng, 6, 0, 5), _seq(rng, 6, 0, 5)) for _ in range(rng.randint(1, 4))]
        inst = or_gadget(pairs)
        got = wlcwis(inst.p1, inst.p2, inst.weights).value - inst.offset
        expected = max(lcwis_oracle(a, b) for a, b in pairs)
        _check(got == expected, pairs=pairs, got=got, expected=expected)
        yield


def suite_pipeline(rng, trials):
    for _ in range(trials):
        f = random_cnf(rng)
        got, expected = maxsat_via_lcwis(f), maxsat_oracle(f)
        _check(got == expected, num_vars=f.num_vars, clauses=f.clauses, got=got, expected=expected)
        yield


SUITES: dict[str, Callable] = {
    "coordinate": suite_coordinate,
    "vector": suite_vector,
    "main-lemma": suite_main_lemma,
    "expansion": suite_expansion,
    "oracle": suite_oracle,
    "and-or": suite_and_or,
    "pipeline": suite_pipeline,
}


def run_suite(name: str, seed: int = 0, trials: int = 200) -> SuiteResult:
    rng = random.Random(f"{seed}:{name}")
    result = SuiteResult(name)
    try:
        for _ in SUITES[name](rng, trials):
            result.passed += 1
    except _Mismatch as exc:
        result.failed = 1
        result.counterexample = str(exc)
    return result


def run_all(names=None, seed: int = 0, trials: int = 200) -> list[SuiteResult]:
    return [run_suite(n, seed, trials) for n in (names or SUITES)]


__all__ = ["SUITES", "SuiteResult", "random_cnf", "run_all", "run_suite"]
