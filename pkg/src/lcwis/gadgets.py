"""Sequence constructions: coordinate/vector gadgets, the pair combiner,
weight expansion and the AND/OR combinators."""

import enum
from dataclasses import dataclass
from typing import Mapping

from .core import MAX_SYMBOL, Sequence, WeightedAlphabet, concat, total_weight

# Lowest symbol the combiner leaves for payload; 1 and 2 are taken by A and B.
PAYLOAD_MIN = 3
SYMBOL_A = 1
SYMBOL_B = 2


class GadgetSide(enum.Enum):
    ONE = 1
    TWO = 2


def coordinate_gadget(side: GadgetSide, bit: int, i: int) -> Sequence:
    """Gadget for coordinate ``i`` (1-based) holding ``bit``.

    Uses only symbols 3i, 3i+1, 3i+2.  Two gadgets of opposite sides share
    a weakly increasing common subsequence of length 1 unless both bits are 1.
    """
    if i < 1:
        raise ValueError(f"coordinate index must be >= 1, got {i}")
    if bit not in (0, 1):
        raise ValueError(f"bit must be 0 or 1, got {bit!r}")
    side = GadgetSide(side)
    base = 3 * i
    if side is GadgetSide.ONE:
        return Sequence((base, base + 1) if bit == 0 else (base + 2,))
    return Sequence((base, base + 2) if bit == 0 else (base + 1,))


def vector_gadget(side: GadgetSide, u) -> Sequence:
    u = tuple(u)
    if not u:
        raise ValueError("vector gadget needs dimension >= 1")
    return concat(*(coordinate_gadget(side, bit, i) for i, bit in enumerate(u, 1)))


@dataclass(frozen=True)
class CombinedInstance:
    p1: Sequence
    p2: Sequence
    weights: WeightedAlphabet
    ell: int
    offset: int
    n: int
    specials: tuple[int, int, int, int]

    @property
    def a(self):
        return self.specials[0]

    @property
    def b(self):
        return self.specials[1]

    @property
    def y(self):
        return self.specials[2]

    @property
    def z(self):
        return self.specials[3]


def combine(S, T, w: Mapping[int, int], top: int | None = None) -> CombinedInstance:
    """Embed ``n`` payload pairs into one weighted pair.

    The result satisfies ``WLCWIS(p1, p2) == max_ij WLCWIS(S[i], T[j]) + offset``
    with ``offset = (4n - 2) * ell``.  Payload symbols must be >= 3; the
    separators are A=1, B=2, Y=top+1, Z=top+2 where ``top`` defaults to the
    largest payload symbol.
    """
    S = [Sequence(s) for s in S]
    T = [Sequence(t) for t in T]
    n = len(S)
    if n == 0 or len(T) == 0:
        raise ValueError("combine needs at least one sequence on each side")
    if len(T) != n:
        raise ValueError(f"size mismatch: {n} vs {len(T)} sequences")
    payload = {x for s in S + T for x in s}
    if payload and min(payload) < PAYLOAD_MIN:
        raise ValueError(f"payload symbols must be >= {PAYLOAD_MIN}")
    hi = max(payload, default=PAYLOAD_MIN - 1)
    if top is None:
        top = hi
    elif top < hi:
        raise ValueError(f"top={top} below largest payload symbol {hi}")
    if top + 2 > MAX_SYMBOL:
        raise OverflowError("separator symbols exceed 32 bits")
    ell = max(1, max(total_weight(s, w) for s in S + T))

    A, B, Y, Z = SYMBOL_A, SYMBOL_B, top + 1, top + 2
    p1 = [A] * (2 * n)
    for k, s in enumerate(S):
        if k:
            p1 += (Y, B)
        p1 += s
    p1 += [Z] * (2 * n)

    block = (Z, Y, B, A)
    p2 = list(block * n)
    for k, t in enumerate(T):
        if k:
            p2 += block
        p2 += t
    p2 += block * n

    weights = WeightedAlphabet({x: w[x] for x in payload}).extended(
        {A: ell, Z: ell, B: 2 * ell, Y: 2 * ell}
    )
    return CombinedInstance(
        p1=Sequence(p1),
        p2=Sequence(p2),
        weights=weights,
        ell=ell,
        offset=(4 * n - 2) * ell,
        n=n,
        specials=(A, B, Y, Z),
    )


def expand_weights(a, w: Mapping[int, int]) -> Sequence:
    """Replace every symbol ``x`` by ``w[x]`` consecutive copies."""
    out = []
    for x in a:
        if x not in w:
            raise KeyError(f"symbol {x} has no weight")
        out.extend([x] * w[x])
    return Sequence(out)


def shift_alphabet(a, delta: int) -> Sequence:
    if delta < 0:
        raise ValueError("shift must be non-negative")
    a = tuple(a)
    if a and max(a) + delta > MAX_SYMBOL:
        raise OverflowError("shifted symbol exceeds 32 bits")
    return Sequence(x + delta for x in a)


def and_gadget(pair1, pair2) -> tuple[Sequence, Sequence]:
    """Concatenate two pairs with the second alphabet lifted above the first.

    LCWIS of the result is the sum of the LCWIS of the two pairs.
    """
    x1, y1 = map(Sequence, pair1)
    x2, y2 = map(Sequence, pair2)
    delta = max(x1 + y1, default=-1) + 1
    return x1 + shift_alphabet(x2, delta), y1 + shift_alphabet(y2, delta)


def or_gadget(pairs) -> CombinedInstance:
    """Combine pairs so that ``WLCWIS - offset`` is the best pair's LCWIS.

    Pair ``k`` is shifted into its own band starting at ``3 + k * width`` with
    ``width`` one more than the largest symbol over all pairs.
    """
    pairs = [(Sequence(x), Sequence(y)) for x, y in pairs]
    if not pairs:
        raise ValueError("or_gadget needs at least one pair")
    width = max((max(x + y, default=0) for x, y in pairs), default=0) + 1
    S, T = [], []
    for k, (x, y) in enumerate(pairs):
        delta = PAYLOAD_MIN + k * width
        S.append(shift_alphabet(x, delta))
        T.append(shift_alphabet(y, delta))
    w = WeightedAlphabet.unit(v for s in S + T for v in s)
    return combine(S, T, w)
