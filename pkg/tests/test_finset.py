import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gammaspace.errors import (
    CarrierError,
    CarrierTooLarge,
    MissingEmptyOrFull,
    NotClosedUnderUnion,
    TopologyError,
)
from gammaspace.finset import (
    closure,
    complement,
    compress,
    enumerate_topologies,
    expand,
    interior,
    is_subset,
    subspace_topology,
    validate_topology,
)
from oracles import brute_closure, brute_interior, brute_topologies

from conftest import A, B, C

TOPS3 = list(enumerate_topologies(3))


def test_validate_example_topology(ex1_topology):
    assert ex1_topology.opens == (0, A, B, A | B, A | B | C)


def test_validate_indiscrete():
    assert validate_topology([7, 0], 3).opens == (0, 7)


def test_validate_rejects_missing_union():
    with pytest.raises(NotClosedUnderUnion) as err:
        validate_topology([0, A, B, 7], 3)
    assert err.value.pair == (A, B)


def test_validate_rejects_missing_full():
    with pytest.raises(MissingEmptyOrFull):
        validate_topology([0, A], 3)


def test_validate_rejects_out_of_carrier():
    with pytest.raises(CarrierError):
        validate_topology([0, 7, 8], 3)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_validate_accepts_exactly_topologies(n):
    # every family containing {}, X: accepted iff the brute-force scan says so
    full = (1 << n) - 1
    accepted = set(brute_topologies(n))
    middle = [a for a in range(1 << n) if a not in (0, full)]
    for code in range(1 << len(middle)):
        fam = [0, full] + [middle[i] for i in range(len(middle)) if code >> i & 1]
        try:
            got = validate_topology(fam, n).opens
        except TopologyError:
            got = None
        assert (got is not None) == (tuple(sorted(set(fam))) in accepted)


def test_closure_interior_examples(ex1_topology):
    assert closure(ex1_topology, A) == A | C
    assert interior(ex1_topology, A | C) == A
    for t in (ex1_topology, TOPS3[0]):
        assert closure(t, 0) == 0 and closure(t, 7) == 7
        assert interior(t, 0) == 0 and interior(t, 7) == 7


@pytest.mark.parametrize("n,count", [(1, 1), (2, 4), (3, 29)])
def test_enumeration_counts_match_brute_force(n, count):
    got = [t.opens for t in enumerate_topologies(n)]
    assert got == brute_topologies(n)
    assert len(got) == count


def test_enumeration_is_deterministic_and_capped():
    assert list(enumerate_topologies(3)) == TOPS3
    with pytest.raises(CarrierTooLarge):
        list(enumerate_topologies(5))


def test_subspace_examples(ex1_topology):
    sub = subspace_topology(ex1_topology, A | C)
    assert sub.names == ("a", "c")
    assert [expand(u, A | C) for u in sub.opens] == [0, A, A | C]
    assert subspace_topology(ex1_topology, 7) == ex1_topology
    empty = subspace_topology(ex1_topology, 0)
    assert empty.n == 0 and empty.opens == (0,)


def test_compress_expand_roundtrip():
    for y in range(16):
        for a in range(16):
            assert expand(compress(a, y), y) == a & y


topologies = st.sampled_from(TOPS3 + list(enumerate_topologies(4)))


@settings(max_examples=300, deadline=None)
@given(topologies, st.data())
def test_closure_interior_laws(t, data):
    a = data.draw(st.integers(0, t.full))
    b = data.draw(st.integers(0, t.full))
    cl, it = closure(t, a), interior(t, a)
    assert cl == brute_closure(t.opens, t.n, a)
    assert it == brute_interior(t.opens, a)
    assert is_subset(it, a) and is_subset(a, cl)
    assert closure(t, cl) == cl and interior(t, it) == it
    assert closure(t, complement(a, t.n)) == complement(it, t.n)
    if is_subset(a, b):
        assert is_subset(cl, closure(t, b)) and is_subset(it, interior(t, b))


@settings(max_examples=200, deadline=None)
@given(topologies, st.data())
def test_subspace_output_is_a_topology(t, data):
    y = data.draw(st.integers(0, t.full))
    sub = subspace_topology(t, y)
    assert validate_topology(sub.opens, sub.n, sub.names) == sub
