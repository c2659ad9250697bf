"""Line-oriented ASCII formats: DIMACS CNF, vector sets, sequences,
weighted alphabets, combined instances and certificates.

Every parser raises :class:`ParseError` (and nothing else) on bad input.
Every writer ends its output with a newline.
"""

import re
from dataclasses import dataclass

from .core import Sequence, WeightedAlphabet
from .gadgets import CombinedInstance
from .reductions import BitVectorSet, CnfFormula, ReductionCertificate

_INT = re.compile(r"-?[0-9]+")
_NAT = re.compile(r"[0-9]+")


@dataclass(frozen=True)
class ParseDiagnostic:
    line: int
    message: str

    def __str__(self):
        return f"line {self.line}: {self.message}"


class ParseError(ValueError):
    def __init__(self, line: int, message: str):
        self.diagnostic = ParseDiagnostic(line, message)
        super().__init__(str(self.diagnostic))

    @property
    def line(self):
        return self.diagnostic.line


def _lines(text) -> list[str]:
    if isinstance(text, (bytes, bytearray)):
        try:
            text = bytes(text).decode("ascii")
        except UnicodeDecodeError as exc:
            raise ParseError(text.count(b"\n", 0, exc.start) + 1, "non-ASCII byte") from None
    elif not text.isascii():
        bad = next(i for i, ch in enumerate(text) if not ch.isascii())
        raise ParseError(text.count("\n", 0, bad) + 1, "non-ASCII character")
    lines = text.split("\n")
    if lines[-1] == "":
        lines.pop()
    return [line.rstrip("\r") for line in lines]


def _int(tok: str, lineno: int, what: str = "integer") -> int:
    if not _INT.fullmatch(tok):
        raise ParseError(lineno, f"expected {what}, got {tok!r}")
    return int(tok)


def _symbol(tok: str, lineno: int) -> int:
    if not _NAT.fullmatch(tok):
        raise ParseError(lineno, f"expected non-negative integer symbol, got {tok!r}")
    value = int(tok)
    if value >= 2**32:
        raise ParseError(lineno, f"symbol {tok} does not fit in 32 bits")
    return value


def _fields(line: str, lineno: int, keys: list[str]) -> dict[str, str]:
    toks = line.split()
    out = {}
    for tok in toks:
        key, sep, value = tok.partition("=")
        if not sep or key not in keys or key in out:
            raise ParseError(lineno, f"unexpected header field {tok!r}")
        out[key] = value
    missing = [k for k in keys if k not in out]
    if missing:
        raise ParseError(lineno, f"missing header field(s): {', '.join(missing)}")
    return out


def _nat_field(fields, key, lineno) -> int:
    if not _NAT.fullmatch(fields[key]):
        raise ParseError(lineno, f"{key} must be a non-negative integer")
    return int(fields[key])


# -- DIMACS -----------------------------------------------------------------

def parse_dimacs(text) -> CnfFormula:
    lines = _lines(text)
    header = None
    clauses: list[list[int]] = []
    current: list[int] = []
    current_start = 0
    for lineno, raw in enumerate(lines, 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            if header is not None:
                raise ParseError(lineno, "duplicate problem line")
            parts = line.split()
            if len(parts) != 4 or parts[0] != "p" or parts[1] != "cnf":
                raise ParseError(lineno, f"malformed problem line {line!r}")
            if not (_NAT.fullmatch(parts[2]) and _NAT.fullmatch(parts[3])):
                raise ParseError(lineno, "problem line counts must be non-negative integers")
            header = (int(parts[2]), int(parts[3]), lineno)
            continue
        if header is None:
            raise ParseError(lineno, "clause before 'p cnf' header")
        num_vars = header[0]
        for tok in line.split():
            lit = _int(tok, lineno, "literal")
            if lit == 0:
                if any(-x in current for x in current):
                    raise ParseError(current_start, "tautological clause (contains x and -x)")
                clauses.append(current)
                current = []
                continue
            if abs(lit) > num_vars:
                raise ParseError(lineno, f"literal {lit} out of range 1..{num_vars}")
            if not current:
                current_start = lineno
            current.append(lit)
    end = len(lines) if lines else 1
    if header is None:
        raise ParseError(end, "missing 'p cnf' header")
    if current:
        raise ParseError(end, "last clause is not terminated by 0")
    if len(clauses) != header[1]:
        raise ParseError(
            end, f"clause-count mismatch: header says {header[1]}, found {len(clauses)}"
        )
    return CnfFormula(header[0], clauses)


def serialize_dimacs(f: CnfFormula) -> str:
    out = [f"p cnf {f.num_vars} {f.num_clauses}"]
    out += [" ".join(map(str, c + (0,))) for c in f.clauses]
    return "\n".join(out) + "\n"


# -- vector sets ------------------------------------------------------------

def parse_vectors(text) -> BitVectorSet:
    lines = _lines(text)
    if not lines:
        raise ParseError(1, "missing 'd=<d>' header")
    head = _fields(lines[0], 1, ["d"])
    d = _nat_field(head, "d", 1)
    if d < 1:
        raise ParseError(1, "dimension must be >= 1")
    vectors = []
    for lineno, line in enumerate(lines[1:], 2):
        toks = line.split()
        if not toks:
            continue
        if len(toks) != d:
            raise ParseError(lineno, f"ragged row: {len(toks)} entries, expected {d}")
        if any(t not in ("0", "1") for t in toks):
            raise ParseError(lineno, "non-binary digit")
        vectors.append(tuple(int(t) for t in toks))
    return BitVectorSet(d, vectors)


def serialize_vectors(vs: BitVectorSet) -> str:
    out = [f"d={vs.dim}"] + [" ".join(map(str, v)) for v in vs.vectors]
    return "\n".join(out) + "\n"


# -- sequences and weights --------------------------------------------------

def _parse_sequence_line(line: str, lineno: int) -> Sequence:
    return Sequence(_symbol(t, lineno) for t in line.split())


def parse_sequences(text) -> list[Sequence]:
    return [_parse_sequence_line(line, k) for k, line in enumerate(_lines(text), 1)]


def _sequence_line(s) -> str:
    return " ".join(map(str, s))


def serialize_sequences(seqs) -> str:
    return "".join(_sequence_line(s) + "\n" for s in seqs)


def _parse_weight_tokens(toks, lineno) -> WeightedAlphabet:
    weights = {}
    for tok in toks:
        sym, sep, wt = tok.partition(":")
        if not sep:
            raise ParseError(lineno, f"expected symbol:weight, got {tok!r}")
        s = _symbol(sym, lineno)
        if not _NAT.fullmatch(wt) or int(wt) < 1:
            raise ParseError(lineno, f"weight must be a positive integer, got {wt!r}")
        if s in weights:
            raise ParseError(lineno, f"duplicate weight for symbol {s}")
        weights[s] = int(wt)
    try:
        return WeightedAlphabet(weights)
    except ValueError as exc:
        raise ParseError(lineno, str(exc)) from None


def parse_weights(text) -> WeightedAlphabet:
    lines = _lines(text)
    weights = {}
    for lineno, line in enumerate(lines, 1):
        part = _parse_weight_tokens(line.split(), lineno)
        for s, w in part.items():
            if s in weights:
                raise ParseError(lineno, f"duplicate weight for symbol {s}")
            weights[s] = w
    return WeightedAlphabet(weights)


def _weight_line(w) -> str:
    return " ".join(f"{s}:{w[s]}" for s in sorted(w))


def serialize_weights(w) -> str:
    return _weight_line(w) + "\n"


# -- combined instances and certificates ------------------------------------

def serialize_instance(inst: CombinedInstance) -> str:
    return (
        f"n={inst.n} ell={inst.ell} offset={inst.offset}\n"
        f"{_sequence_line(inst.p1)}\n"
        f"{_sequence_line(inst.p2)}\n"
        f"{_weight_line(inst.weights)}\n"
        f"{_sequence_line(inst.specials)}\n"
    )


def parse_instance(text) -> CombinedInstance:
    lines = _lines(text)
    if len(lines) != 5:
        raise ParseError(1, f"expected 5 lines, got {len(lines)}")
    head = _fields(lines[0], 1, ["n", "ell", "offset"])
    n, ell, offset = (_nat_field(head, k, 1) for k in ("n", "ell", "offset"))
    p1 = _parse_sequence_line(lines[1], 2)
    p2 = _parse_sequence_line(lines[2], 3)
    weights = _parse_weight_tokens(lines[3].split(), 4)
    specials = _parse_sequence_line(lines[4], 5)
    if len(specials) != 4:
        raise ParseError(5, "expected four special symbols A B Y Z")
    return CombinedInstance(p1, p2, weights, ell, offset, n, tuple(specials))


def serialize_certificate(cert: ReductionCertificate) -> str:
    clauses = "-" if cert.num_clauses is None else cert.num_clauses
    return f"n={cert.n} d={cert.d} ell={cert.ell} offset={cert.offset} clauses={clauses}\n"


def parse_certificate(text) -> ReductionCertificate:
    lines = [l for l in _lines(text) if l.strip()]
    if len(lines) != 1:
        raise ParseError(1, "certificate must be a single line")
    fields = _fields(lines[0], 1, ["n", "d", "ell", "offset", "clauses"])
    n, d, ell, offset = (_nat_field(fields, k, 1) for k in ("n", "d", "ell", "offset"))
    clauses = None if fields["clauses"] == "-" else _nat_field(fields, "clauses", 1)
    return ReductionCertificate(n, d, ell, offset, clauses)
