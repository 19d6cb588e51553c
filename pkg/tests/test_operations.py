import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gammaspace.errors import ExtraEntry, MissingEntry, NotExpansive, RuleError
from gammaspace.finset import closure, enumerate_topologies, interior, is_subset, validate_topology
from gammaspace.lab import catalog_rules
from gammaspace.operations import (
    ClIntCl,
    Closure,
    Explicit,
    Identity,
    IfContains,
    IntClosure,
    Space,
    build_operation,
    is_open_operation,
    is_regular_operation,
    is_strictly_regular_operation,
    validate_operation,
)
from gammaspace.worked import load_example

from conftest import A, B, C

IRREGULAR = {0: 0, A: A | C, B: B, A | B: A | B, 7: 7}


def test_intclosure_table(ex1_topology):
    table = build_operation(ex1_topology, IntClosure())
    # cl({a b}) = X and int(X) = X, confirmed by the oracle-free definitions
    assert closure(ex1_topology, A | B) == 7 and interior(ex1_topology, 7) == 7
    assert table[A | B] == 7
    assert table.values == (0, A, B, 7, 7)


def test_identity_table(ex1_topology):
    assert build_operation(ex1_topology, Identity()).values == ex1_topology.opens


def test_conditional_rule():
    t = validate_topology([0, A, B | C, 7], 3)
    table = build_operation(t, IfContains(1, Identity(), Closure()))
    assert table[A] == A and table[B | C] == B | C


def test_rule_point_must_exist(ex1_topology):
    with pytest.raises(RuleError):
        build_operation(ex1_topology, IfContains(5, Identity(), Closure()))


def test_rule_depth_limit(ex1_topology):
    rule = Identity()
    for _ in range(5):
        rule = IfContains(0, rule, Closure())
    with pytest.raises(RuleError):
        build_operation(ex1_topology, rule)


def test_validate_operation_errors(ex1_topology):
    full = {u: IntClosure().apply(ex1_topology, u) for u in ex1_topology.opens}
    assert validate_operation(ex1_topology, full).values == (0, A, B, 7, 7)
    with pytest.raises(NotExpansive) as err:
        validate_operation(ex1_topology, {**full, A: 0})
    assert err.value.open_set == A
    missing = dict(full)
    del missing[7]
    with pytest.raises(MissingEntry) as err:
        validate_operation(ex1_topology, missing)
    assert err.value.open_set == 7
    with pytest.raises(ExtraEntry):
        validate_operation(ex1_topology, {**full, C: C})
    with pytest.raises(NotExpansive):
        build_operation(ex1_topology, Explicit(tuple({**full, B: 0}.items())))


def test_regularity_examples(ex1, ex2, ex1_topology):
    for s in (ex1, ex2):
        assert is_regular_operation(s)
        assert is_strictly_regular_operation(s)
    bad = Space(ex1_topology, validate_operation(ex1_topology, IRREGULAR))
    verdict = is_regular_operation(bad)
    assert not verdict
    assert verdict.witness == {"x": 0, "U": A, "V": A | B}
    # no open W containing a has a value inside {a}
    assert not any(
        u & A and is_subset(IRREGULAR[u], A) for u in ex1_topology.opens
    )
    assert not is_strictly_regular_operation(bad)


def test_open_operation_examples(ex1, ex2):
    assert is_open_operation(ex1)
    verdict = is_open_operation(ex2)
    assert not verdict and verdict.witness == {"V": A}
    reg = load_example("RegularExample")
    assert is_open_operation(Space(reg.topology, build_operation(reg.topology, Identity())))


SPACES = [
    (t, rule) for n in (1, 2, 3) for t in enumerate_topologies(n) for rule in catalog_rules(n)
]


@settings(max_examples=300, deadline=None)
@given(st.sampled_from(SPACES))
def test_rule_tables_are_expansive_and_deterministic(pair):
    t, rule = pair
    table = build_operation(t, rule)
    assert all(is_subset(u, v) for u, v in zip(t.opens, table.values))
    assert build_operation(t, rule) == table


@pytest.mark.parametrize("rule", [Closure(), IntClosure(), ClIntCl()])
def test_leaf_rules_expansive_everywhere(rule):
    for n in (1, 2, 3, 4):
        for t in enumerate_topologies(n):
            table = build_operation(t, rule)
            assert all(is_subset(u, v) for u, v in zip(t.opens, table.values))


def test_strict_implies_regular_everywhere():
    for t, rule in SPACES:
        s = Space(t, build_operation(t, rule))
        if is_strictly_regular_operation(s):
            assert is_regular_operation(s)
