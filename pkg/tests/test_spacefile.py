import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gammaspace.errors import MissingEntry, NotClosedUnderUnion
from gammaspace.finset import enumerate_topologies
from gammaspace.lab import catalog_rules
from gammaspace.operations import Space, make_space, validate_operation
from gammaspace.spacefile import (
    OperationInvalid,
    SpaceSyntaxError,
    TopologyInvalid,
    UnknownPoint,
    parse_rule,
    parse_space_file,
    render_space,
)
from gammaspace.worked import EXAMPLE_FILES, space_text

EXAMPLE1 = space_text("example1.space")


def test_example1_file(ex1):
    s = parse_space_file(EXAMPLE1)
    assert s.name == "Example1"
    assert len(s.opens) == 5
    assert s.values == (0, 1, 2, 7, 7)
    assert s == ex1


def test_unknown_point():
    text = EXAMPLE1.replace("open {a b}\n", "open {a d}\n")
    with pytest.raises(UnknownPoint) as err:
        parse_space_file(text)
    assert err.value.name == "d"
    assert (err.value.line, err.value.col) == (7, 9)


def test_explicit_table_missing_full_entry():
    text = space_text("explicit_irregular.space").replace("gamma {a b c} = {a b c}\n", "")
    with pytest.raises(OperationInvalid) as err:
        parse_space_file(text)
    assert isinstance(err.value.reason, MissingEntry)


def test_topology_errors_are_wrapped():
    text = EXAMPLE1.replace("open {a b}\n", "")
    with pytest.raises(TopologyInvalid) as err:
        parse_space_file(text)
    assert isinstance(err.value.reason, NotClosedUnderUnion)


@pytest.mark.parametrize(
    "mutation,line",
    [
        (("gamma rule intclosure", "gamma rule nonsense"), 9),
        (("open {a}", "open {a"), 5),
        (("open {a}", "open a"), 5),
        (("end\n", ""), 10),
        (("space Example1", "spaces Example1"), 2),
        (("points a b c", "points a b a"), 3),
    ],
)
def test_syntax_errors_carry_line(mutation, line):
    with pytest.raises(SpaceSyntaxError) as err:
        parse_space_file(EXAMPLE1.replace(*mutation))
    assert err.value.line == line


def test_nested_rule_parse():
    rule = parse_rule("if-contains b then if-contains a then identity else clintcl else closure", "abc")
    assert rule.text("abc") == "if-contains b then if-contains a then identity else clintcl else closure"


@pytest.mark.parametrize("name", sorted(EXAMPLE_FILES.values()) + ["explicit_irregular.space"])
def test_bundled_files_roundtrip(name):
    s = parse_space_file(space_text(name))
    assert parse_space_file(render_space(s)) == s


SPACES = [(t, r) for n in (1, 2, 3, 4) for t in enumerate_topologies(n) for r in catalog_rules(n)]


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(SPACES), st.booleans())
def test_roundtrip_property(pair, explicit):
    t, rule = pair
    s = make_space(t, rule, "S")
    if explicit:
        s = Space(t, validate_operation(t, s.gamma.entries), "S")
    assert parse_space_file(render_space(s)) == s
