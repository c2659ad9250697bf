import pytest
from hypothesis import given, settings, strategies as st

from lcwis import formats
from lcwis.core import Sequence, WeightedAlphabet
from lcwis.formats import ParseError
from lcwis.gadgets import combine
from lcwis.reductions import BitVectorSet, CnfFormula, ReductionCertificate

from conftest import PAPER_A, PAPER_B


def test_dimacs_basic():
    f = formats.parse_dimacs(b"p cnf 3 2\n1 -2 0\n2 3 0\n")
    assert (f.num_vars, f.num_clauses) == (3, 2)
    assert f.clauses == ((1, -2), (2, 3))


def test_dimacs_comment_and_multiline_clause():
    assert formats.parse_dimacs("c comment\np cnf 1 1\n1 0\n").num_clauses == 1
    f = formats.parse_dimacs("p cnf 3 1\n1 2\n-3 0\n")
    assert f.clauses == ((1, 2, -3),)


@pytest.mark.parametrize(
    "text, line, fragment",
    [
        ("p cnf 1 2\n1 0\n", 2, "clause-count mismatch"),
        ("1 0\n", 1, "header"),
        ("", 1, "missing"),
        ("p cnf 2 1\n1 3 0\n", 2, "out of range"),
        ("p cnf 2 1\n1 -1 0\n", 2, "tautological"),
        ("p cnf 2 1\n1 2\n", 2, "not terminated"),
        ("p cnf 2 1\n1 x 0\n", 2, "literal"),
        ("p cnf 2 1\np cnf 2 1\n", 2, "duplicate"),
        ("p dnf 2 1\n", 1, "malformed"),
    ],
)
def test_dimacs_errors(text, line, fragment):
    with pytest.raises(ParseError) as err:
        formats.parse_dimacs(text)
    assert err.value.line == line
    assert fragment in err.value.diagnostic.message


def test_dimacs_roundtrip():
    f = CnfFormula(4, [[1, -2], [3], [], [-4, 2, 1]])
    assert formats.parse_dimacs(formats.serialize_dimacs(f)) == f


def test_vectors():
    vs = formats.parse_vectors("d=2\n1 0\n0 1\n")
    assert vs == BitVectorSet(2, [(1, 0), (0, 1)])
    with pytest.raises(ParseError, match="ragged"):
        formats.parse_vectors("d=2\n1 0 1\n")
    with pytest.raises(ParseError, match="non-binary"):
        formats.parse_vectors("d=2\n1 2\n")
    with pytest.raises(ParseError):
        formats.parse_vectors("d=0\n")


vector_sets = st.integers(1, 6).flatmap(
    lambda d: st.lists(st.tuples(*[st.integers(0, 1)] * d), max_size=8).map(
        lambda vs: BitVectorSet(d, vs)
    )
)


@settings(max_examples=200)
@given(vector_sets)
def test_vectors_roundtrip(vs):
    text = formats.serialize_vectors(vs)
    assert text.endswith("\n")
    assert formats.parse_vectors(text) == vs


def test_sequences():
    assert formats.parse_sequences("1 2 5 2 5 3\n2 4 5 2 3 4\n") == [Sequence(PAPER_A), Sequence(PAPER_B)]
    assert formats.parse_sequences("\n") == [Sequence()]
    assert formats.parse_sequences("\n\n") == [Sequence(), Sequence()]
    with pytest.raises(ParseError, match="non-negative"):
        formats.parse_sequences("1 -2\n")
    with pytest.raises(ParseError) as err:
        formats.parse_sequences("1\n2 b\n")
    assert err.value.line == 2


seqs = st.lists(st.integers(0, 2**32 - 1), max_size=10)


@settings(max_examples=200)
@given(st.lists(seqs, max_size=5))
def test_sequences_roundtrip(ss):
    assert formats.parse_sequences(formats.serialize_sequences(ss)) == [tuple(s) for s in ss]


@settings(max_examples=200)
@given(st.dictionaries(st.integers(0, 2**32 - 1), st.integers(1, 2**62 - 1), max_size=8))
def test_weights_roundtrip(d):
    w = WeightedAlphabet(d)
    assert formats.parse_weights(formats.serialize_weights(w)) == w


def test_weights_errors():
    assert formats.parse_weights("3:1 4:2\n5:7") == WeightedAlphabet({3: 1, 4: 2, 5: 7})
    for bad in ("3:0", "3", "3:1 3:2", "x:1", f"1:{2**62}"):
        with pytest.raises(ParseError):
            formats.parse_weights(bad)


@settings(max_examples=200)
@given(
    st.integers(1, 4).flatmap(
        lambda n: st.tuples(
            st.lists(st.lists(st.integers(3, 9), max_size=5), min_size=n, max_size=n),
            st.lists(st.lists(st.integers(3, 9), max_size=5), min_size=n, max_size=n),
        )
    ),
    st.lists(st.integers(1, 3), min_size=7, max_size=7),
)
def test_instance_roundtrip(payload, ws):
    S, T = payload
    inst = combine(S, T, WeightedAlphabet(dict(zip(range(3, 10), ws))))
    text = formats.serialize_instance(inst)
    assert text.splitlines()[0] == f"n={inst.n} ell={inst.ell} offset={inst.offset}"
    assert formats.parse_instance(text) == inst
    assert formats.serialize_instance(formats.parse_instance(text)) == text


@settings(max_examples=200)
@given(
    st.integers(1, 100), st.integers(1, 100), st.integers(1, 100), st.integers(0, 10**6),
    st.none() | st.integers(0, 100),
)
def test_certificate_roundtrip(n, d, ell, offset, m):
    cert = ReductionCertificate(n, d, ell, offset, m)
    text = formats.serialize_certificate(cert)
    assert formats.parse_certificate(text) == cert


def test_certificate_format():
    cert = ReductionCertificate(2, 3, 6, 36, None)
    assert formats.serialize_certificate(cert) == "n=2 d=3 ell=6 offset=36 clauses=-\n"


def test_non_ascii_input_is_diagnosed():
    with pytest.raises(ParseError) as err:
        formats.parse_sequences(b"1 2\n\xff\n")
    assert err.value.line == 2


PARSERS = [
    formats.parse_dimacs,
    formats.parse_vectors,
    formats.parse_sequences,
    formats.parse_weights,
    formats.parse_instance,
    formats.parse_certificate,
]


@pytest.mark.parametrize("parser", PARSERS, ids=lambda p: p.__name__)
@settings(max_examples=300)
@given(data=st.binary(max_size=80) | st.text("pcnfd=:-0123456789 \n\x0bx", max_size=60).map(str.encode))
def test_parsers_never_crash(parser, data):
    try:
        parser(data)
    except ParseError as exc:
        assert exc.line >= 1
