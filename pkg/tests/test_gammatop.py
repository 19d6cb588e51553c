import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gammaspace.errors import NotAGammaOpenCover
from gammaspace.finset import closure, complement, enumerate_topologies, interior, is_subset
from gammaspace.gammatop import (
    finite_intersection_characterization,
    gamma_closure,
    gamma_interior,
    gamma_open_family,
    is_gamma0_compact,
    is_gamma_closed,
    minimal_closure_subcover,
)
from gammaspace.lab import catalog_rules
from gammaspace.operations import Identity, is_regular_operation, make_space
from oracles import brute_gamma_open

from conftest import A, B, C, D

SPACES3 = [
    make_space(t, rule)
    for n in (1, 2, 3)
    for t in enumerate_topologies(n)
    for rule in catalog_rules(n)
]


def test_gamma_interior_examples(ex1, ex2):
    assert gamma_interior(ex1, A | C) == A
    assert gamma_interior(ex1, 7) == 7
    assert gamma_interior(ex2, A) == 0


def test_gamma_closure_examples(ex1, ex2):
    assert gamma_closure(ex1, A) == A | C
    assert gamma_closure(ex1, 0) == 0
    assert gamma_closure(ex2, C) == 7


def test_gamma_open_family_examples(ex1, ex2, normal_example):
    assert gamma_open_family(ex1) == (0, A, B, A | B, 7)
    assert gamma_open_family(ex2) == (0, 7)
    expected = tuple(
        brute_gamma_open(normal_example.opens, normal_example.gamma.entries, 4)
    )
    assert expected == (0, A, B | C | D, 15)
    assert gamma_open_family(normal_example) == expected


def test_gamma_closed_examples(ex1, ex2):
    assert is_gamma_closed(ex1, C, "closure")
    for s in (ex1, ex2):
        for conv in ("closure", "complement"):
            assert is_gamma_closed(s, 7, conv)
    assert not is_gamma_closed(ex2, A, "complement")


def test_minimal_closure_subcover(ex1):
    assert minimal_closure_subcover(ex1, [A, B, 7]) == (7,)
    assert minimal_closure_subcover(ex1, [7]) == (7,)
    with pytest.raises(NotAGammaOpenCover) as err:
        minimal_closure_subcover(ex1, [A, B])
    assert err.value.point == 2
    with pytest.raises(NotAGammaOpenCover) as err:
        minimal_closure_subcover(ex1, [A | C, 7])
    assert err.value.member == A | C


def test_compactness_examples(ex1, ex2, normal_example):
    for s in (ex1, ex2, normal_example):
        verdict = is_gamma0_compact(s)
        assert verdict
        for cover, sub in verdict.certificate.items():
            assert set(sub) <= set(cover)
        assert finite_intersection_characterization(s)
        assert finite_intersection_characterization(s, reading="mixed")


def test_compactness_and_characterization_agree_on_three_points():
    for s in SPACES3:
        assert bool(is_gamma0_compact(s)) is True
        assert bool(finite_intersection_characterization(s)) is True


@settings(max_examples=400, deadline=None)
@given(st.sampled_from(SPACES3), st.data())
def test_gamma_operator_laws(s, data):
    a = data.draw(st.integers(0, s.full))
    b = data.draw(st.integers(0, s.full))
    it, cl = gamma_interior(s, a), gamma_closure(s, a)
    assert is_subset(it, a) and is_subset(a, cl)
    assert s.topology.is_open(it)
    if is_subset(a, b):
        assert is_subset(it, gamma_interior(s, b))
        assert is_subset(cl, gamma_closure(s, b))
    assert gamma_closure(s, complement(a, s.n)) == complement(it, s.n)
    assert bool(is_gamma_closed(s, a, "closure")) == bool(is_gamma_closed(s, a, "complement"))
    # cl_gamma(A) lies inside every gamma-closed superset
    for f in range(s.full + 1):
        if is_subset(a, f) and is_gamma_closed(s, f):
            assert is_subset(cl, f)


def test_gamma_open_family_structure():
    for s in SPACES3:
        _check_family(s)


def _check_family(s):
    fam = gamma_open_family(s)
    assert list(fam) == brute_gamma_open(s.opens, s.gamma.entries, s.n)
    assert 0 in fam and s.full in fam
    assert set(fam) <= set(s.opens)
    members_ = set(fam)
    union = 0
    for u in fam:
        union |= u
        for v in fam:
            assert u | v in members_
            if is_regular_operation(s):
                assert u & v in members_
    assert union in members_


def test_identity_degenerates_to_topology():
    for n in (1, 2, 3):
        for t in enumerate_topologies(n):
            s = make_space(t, Identity())
            assert gamma_open_family(s) == t.opens
            for a in range(t.full + 1):
                assert gamma_interior(s, a) == interior(t, a)
                assert gamma_closure(s, a) == closure(t, a)
