"""Sequences, weighted alphabets and the elementary predicates over them."""

from collections.abc import Iterable, Mapping

MAX_SYMBOL = 2**32 - 1
WEIGHT_BUDGET = 2**62


class Sequence(tuple):
    """Immutable sequence of non-negative 32-bit integer symbols."""

    __slots__ = ()

    def __new__(cls, values: Iterable[int] = ()):
        values = tuple(values)
        for v in values:
            if isinstance(v, bool) or not isinstance(v, int):
                raise TypeError(f"symbol must be an int, got {v!r}")
            if v < 0 or v > MAX_SYMBOL:
                raise ValueError(f"symbol {v} outside [0, 2^32)")
        return super().__new__(cls, values)

    @property
    def length(self) -> int:
        return len(self)

    def __add__(self, other):
        return Sequence(tuple(self) + tuple(other))

    def __repr__(self):
        return f"Sequence({list(self)!r})"


def make_sequence(values: Iterable[int]) -> Sequence:
    return Sequence(values)


def concat(*parts: Iterable[int]) -> Sequence:
    out: list[int] = []
    for p in parts:
        out.extend(p)
    return Sequence(out)


class WeightedAlphabet(Mapping):
    """Read-only map from symbols to positive integer weights."""

    def __init__(self, weights: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = weights.items() if isinstance(weights, Mapping) else weights
        data = {}
        for sym, wt in items:
            Sequence((sym,))
            if isinstance(wt, bool) or not isinstance(wt, int):
                raise TypeError(f"weight of {sym} must be an int, got {wt!r}")
            if wt < 1:
                raise ValueError(f"weight of {sym} must be >= 1, got {wt}")
            if wt >= WEIGHT_BUDGET:
                raise ValueError(f"weight of {sym} exceeds 2^62")
            data[sym] = wt
        self._weights = data

    @classmethod
    def unit(cls, symbols: Iterable[int]) -> "WeightedAlphabet":
        return cls({s: 1 for s in symbols})

    def extended(self, extra: Mapping[int, int]) -> "WeightedAlphabet":
        merged = dict(self._weights)
        merged.update(extra)
        return WeightedAlphabet(merged)

    def __getitem__(self, sym):
        try:
            return self._weights[sym]
        except KeyError:
            raise KeyError(f"symbol {sym} has no weight") from None

    def __iter__(self):
        return iter(self._weights)

    def __len__(self):
        return len(self._weights)

    def __eq__(self, other):
        if isinstance(other, WeightedAlphabet):
            return self._weights == other._weights
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._weights.items()))

    def __repr__(self):
        return f"WeightedAlphabet({self._weights!r})"


def is_weakly_increasing(s: Iterable[int]) -> bool:
    s = tuple(s)
    return all(x <= y for x, y in zip(s, s[1:]))


def is_subsequence(candidate: Iterable[int], host: Iterable[int]) -> bool:
    """Greedy left-to-right embedding test, O(len(host))."""
    it = iter(host)
    return all(any(c == h for h in it) for c in candidate)


def total_weight(s: Iterable[int], w: Mapping[int, int]) -> int:
    total = 0
    for sym in s:
        if sym not in w:
            raise KeyError(f"symbol {sym} has no weight")
        total += w[sym]
    if total >= WEIGHT_BUDGET:
        raise OverflowError("total weight exceeds the 2^62 budget")
    return total
