import pytest

from hypothesis import given, settings

from arbor.rank.exceptions import (
    BadMultiplicityError,
    NoRootError,
    PresentationSyntaxError,
    UndefinedStateError,
)
from arbor.rank.presentation import dump, load, OMEGA, parse_dsl, serialize

from tests.fixtures.strategies import presentations


def test_parse_dsl():
    p = parse_dsl('state r { m:w } state m { l:1 } state l { } root r')
    assert p.root == 'r'
    assert p.states == ('r', 'm', 'l')
    assert p.entries('r')[0].multiplicity is OMEGA
    assert p.entries('m')[0].multiplicity == 1
    assert p.entries('l') == ()


def test_parse_dsl_layout_and_comments():
    text = """
    # the complete binary tree
    state r { q:2 }   # root
    state q {
        q:2
    }
    root r
    """
    assert parse_dsl(text) == parse_dsl('state r { q:2 } state q { q:2 } root r')


def test_parse_dsl_commas_optional():
    assert parse_dsl('state r { a:1 b:2 } state a { } state b { } root r') == parse_dsl(
        'state r { a:1, b:2 } state a { } state b { } root r',
    )


def test_parse_dsl_root_first():
    p = parse_dsl('root a state a { a:1 }')
    assert p.root == 'a'


def test_parse_dsl_syntax_error():
    with pytest.raises(PresentationSyntaxError) as cv:
        parse_dsl('state a { b:1 ')
    assert cv.value.exit_code == 2
    assert str(cv.value).startswith('line 1')


def test_parse_dsl_duplicate_state():
    with pytest.raises(PresentationSyntaxError) as cv:
        parse_dsl('state a { }\nstate a { }\nroot a')
    assert cv.value.line == 2
    assert 'defined twice' in str(cv.value)


def test_parse_dsl_two_roots():
    with pytest.raises(PresentationSyntaxError):
        parse_dsl('state a { } root a root a')


def test_parse_dsl_undefined_state():
    with pytest.raises(UndefinedStateError) as cv:
        parse_dsl('state a { b:1 }\nroot a')
    assert cv.value.state == 'b'
    assert cv.value.line == 1
    assert cv.value.exit_code == 3
    assert 'line 1' in str(cv.value)


def test_parse_dsl_undefined_root():
    with pytest.raises(UndefinedStateError) as cv:
        parse_dsl('state a { } root z')
    assert cv.value.state == 'z'


def test_parse_dsl_no_root():
    with pytest.raises(NoRootError):
        parse_dsl('state a { }')


@pytest.mark.parametrize('multiplicity', ('0', 'x', '00'))
def test_parse_dsl_bad_multiplicity(multiplicity):
    with pytest.raises(BadMultiplicityError) as cv:
        parse_dsl(f'state a {{ b:{multiplicity} }} state b {{ }} root a')
    assert cv.value.value == multiplicity


def test_serialize():
    p = parse_dsl('state a { b:w, b:2 } state b { } root a')
    assert serialize(p) == 'state a { b:w, b:2 }\nstate b { }\nroot a\n'


def test_serialize_single_state():
    assert serialize(parse_dsl('state a { a:1 } root a')) == 'state a { a:1 } root a\n'


def test_load_dump(tmp_path, presentation_factory):
    p = presentation_factory('star_on_double_ray')
    path = str(tmp_path / 'tree.tree')
    dump(p, path)
    assert load(path) == p


@settings(max_examples=50)
@given(presentations(max_states=5, max_entries=3))
def test_serialize_parses_back(p):
    assert parse_dsl(serialize(p)) == p
