"""MAX-CNF-SAT -> most-orthogonal vectors -> LCWIS, plus decoding and oracles."""

import itertools
from dataclasses import dataclass
from typing import Optional

from .core import Sequence, WeightedAlphabet
from .gadgets import CombinedInstance, GadgetSide, combine, expand_weights, vector_gadget
from .solvers import lcwis

DEFAULT_BUDGET_N = 12
ORACLE_BUDGET_N = 20


class BudgetExceeded(ValueError):
    pass


@dataclass(frozen=True)
class CnfFormula:
    num_vars: int
    clauses: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "clauses", tuple(tuple(c) for c in self.clauses))
        if self.num_vars < 0:
            raise ValueError("num_vars must be >= 0")
        for k, clause in enumerate(self.clauses):
            for lit in clause:
                if lit == 0 or abs(lit) > self.num_vars:
                    raise ValueError(f"clause {k}: literal {lit} out of range")
                if -lit in clause:
                    raise ValueError(f"clause {k}: tautological, contains {abs(lit)} and -{abs(lit)}")

    @property
    def num_clauses(self) -> int:
        return len(self.clauses)


@dataclass(frozen=True)
class BitVectorSet:
    dim: int
    vectors: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "vectors", tuple(tuple(v) for v in self.vectors))
        if self.dim < 1:
            raise ValueError("dimension must be >= 1")
        for v in self.vectors:
            if len(v) != self.dim:
                raise ValueError(f"vector of length {len(v)} in a set of dimension {self.dim}")
            if any(x not in (0, 1) for x in v):
                raise ValueError(f"non-binary entry in {v}")

    def __len__(self):
        return len(self.vectors)


@dataclass(frozen=True)
class ReductionCertificate:
    n: int
    d: int
    ell: int
    offset: int
    num_clauses: Optional[int] = None


def _satisfied(clause, assignment: dict[int, bool]) -> bool:
    return any(abs(lit) in assignment and assignment[abs(lit)] == (lit > 0) for lit in clause)


def _half_vectors(f: CnfFormula, variables) -> list[tuple[int, ...]]:
    out = []
    for bits in itertools.product((False, True), repeat=len(variables)):
        alpha = dict(zip(variables, bits))
        out.append(tuple(0 if _satisfied(c, alpha) else 1 for c in f.clauses))
    return out


def vectors_from_cnf(f: CnfFormula) -> tuple[BitVectorSet, BitVectorSet]:
    """Split-and-list: one vector per half-assignment, coordinate i is 0 iff
    that half satisfies clause i.  Then ``u . v`` counts clauses left
    unsatisfied by the joint assignment."""
    if f.num_vars < 1 or f.num_clauses < 1:
        raise ValueError("formula needs at least one variable and one clause")
    split = (f.num_vars + 1) // 2
    first = list(range(1, split + 1))
    second = list(range(split + 1, f.num_vars + 1))
    d = f.num_clauses
    return BitVectorSet(d, _half_vectors(f, first)), BitVectorSet(d, _half_vectors(f, second))


def _pad(vs: BitVectorSet, n: int) -> list[tuple[int, ...]]:
    return list(vs.vectors) + [vs.vectors[0]] * (n - len(vs))


def ovp_combined_instance(U: BitVectorSet, V: BitVectorSet) -> CombinedInstance:
    """Weighted combiner output over the vector gadgets of ``U`` and ``V``.

    The smaller set is padded to the common size by repeating its first
    vector, which cannot change the minimum inner product.
    """
    if U.dim != V.dim:
        raise ValueError(f"dimension mismatch: {U.dim} vs {V.dim}")
    if not len(U) or not len(V):
        raise ValueError("vector sets must be non-empty")
    n, d = max(len(U), len(V)), U.dim
    S = [vector_gadget(GadgetSide.ONE, u) for u in _pad(U, n)]
    T = [vector_gadget(GadgetSide.TWO, v) for v in _pad(V, n)]
    unit = WeightedAlphabet.unit(range(3, 3 * d + 3))
    return combine(S, T, unit, top=3 * d + 2)


def ovp_to_lcwis_instance(U: BitVectorSet, V: BitVectorSet, num_clauses: Optional[int] = None):
    """Build an unweighted pair whose LCWIS is ``offset + d - min u.v``."""
    inst = ovp_combined_instance(U, V)
    out1 = expand_weights(inst.p1, inst.weights)
    out2 = expand_weights(inst.p2, inst.weights)
    cert = ReductionCertificate(n=inst.n, d=U.dim, ell=inst.ell, offset=inst.offset,
                                num_clauses=num_clauses)
    return out1, out2, cert


class DecodeError(ValueError):
    pass


def decode(cert: ReductionCertificate, lcwis_value: int) -> int:
    """Minimum inner product encoded by ``lcwis_value``."""
    if not cert.offset <= lcwis_value <= cert.offset + cert.d:
        raise DecodeError(
            f"LCWIS value {lcwis_value} outside feasible band "
            f"[{cert.offset}, {cert.offset + cert.d}]"
        )
    return cert.d - (lcwis_value - cert.offset)


def decode_maxsat(cert: ReductionCertificate, lcwis_value: int) -> int:
    if cert.num_clauses is None:
        raise ValueError("certificate carries no clause count")
    return cert.num_clauses - decode(cert, lcwis_value)


def cnf_to_lcwis_instance(f: CnfFormula, budget_n: int = DEFAULT_BUDGET_N):
    if f.num_vars > budget_n:
        raise BudgetExceeded(f"N={f.num_vars} exceeds budget {budget_n}")
    U, V = vectors_from_cnf(f)
    return ovp_to_lcwis_instance(U, V, num_clauses=f.num_clauses)


def maxsat_via_lcwis(f: CnfFormula, budget_n: int = DEFAULT_BUDGET_N) -> int:
    """Exact MAX-SAT through a single LCWIS solve."""
    a, b, cert = cnf_to_lcwis_instance(f, budget_n)
    return decode_maxsat(cert, lcwis(a, b).value)


def maxsat_oracle(f: CnfFormula) -> int:
    if f.num_vars > ORACLE_BUDGET_N:
        raise BudgetExceeded(f"N={f.num_vars} exceeds oracle budget {ORACLE_BUDGET_N}")
    best = 0
    variables = range(1, f.num_vars + 1)
    for bits in itertools.product((False, True), repeat=f.num_vars):
        alpha = dict(zip(variables, bits))
        best = max(best, sum(_satisfied(c, alpha) for c in f.clauses))
    return best


def ovp_oracle(U: BitVectorSet, V: BitVectorSet, r: int) -> tuple[bool, int]:
    if U.dim != V.dim:
        raise ValueError(f"dimension mismatch: {U.dim} vs {V.dim}")
    if not len(U) or not len(V):
        raise ValueError("vector sets must be non-empty")
    best = min(sum(x * y for x, y in zip(u, v)) for u in U.vectors for v in V.vectors)
    return best <= r, best


__all__ = [
    "BitVectorSet",
    "BudgetExceeded",
    "CnfFormula",
    "DecodeError",
    "ReductionCertificate",
    "Sequence",
    "cnf_to_lcwis_instance",
    "decode",
    "decode_maxsat",
    "maxsat_oracle",
    "maxsat_via_lcwis",
    "ovp_combined_instance",
    "ovp_oracle",
    "ovp_to_lcwis_instance",
    "vectors_from_cnf",
]
