#
# This file is part of the arbor-rank project.
#
# Copyright (c) 2026 The arbor-rank developers. All Rights Reserved.
#
from collections import OrderedDict, namedtuple

import pyparsing as pp

from arbor.rank.exceptions import (
    BadMultiplicityError,
    NoRootError,
    PresentationSyntaxError,
    UndefinedStateError,
)
from arbor.rank.presentation.base import OMEGA, TreePresentation


IDENTIFIER_CHARS = pp.alphanums + '_-.'

_Child = namedtuple('_Child', ('state', 'multiplicity', 'line', 'column'))
_State = namedtuple('_State', ('name', 'children', 'line', 'column'))
_Root = namedtuple('_Root', ('name', 'line', 'column'))


def _located(factory):
    def action(text, loc, tokens):
        return factory(*tokens, pp.lineno(loc, text), pp.col(loc, text))
    return action


def _make_state(name, *rest):
    *children, line, column = rest
    return _State(name, tuple(children), line, column)


def _build_grammar():
    identifier = pp.Word(pp.alphas + '_', IDENTIFIER_CHARS)
    multiplicity = pp.Word(pp.alphanums)
    child = (identifier + pp.Suppress(':') + multiplicity).set_parse_action(
        _located(_Child),
    )
    state = (
        pp.Suppress(pp.Keyword('state'))
        + identifier
        + pp.Suppress('{')
        + pp.ZeroOrMore(child + pp.Optional(pp.Suppress(',')))
        + pp.Suppress('}')
    ).set_parse_action(_located(_make_state))
    root = (pp.Suppress(pp.Keyword('root')) + identifier).set_parse_action(_located(_Root))
    document = pp.ZeroOrMore(state | root)
    document.ignore(pp.python_style_comment)
    return document


_DOCUMENT = _build_grammar()


def _to_multiplicity(child):
    value = child.multiplicity
    if value == 'w':
        return OMEGA
    if value.isdigit() and int(value) > 0:
        return int(value)
    raise BadMultiplicityError(value, line=child.line, column=child.column)


def parse_dsl(text):
    """
    Parse a tree description.

    The grammar is ``state NAME { CHILD:MULT ... } ... root NAME`` where ``MULT``
    is a positive integer or ``w``. Whitespace is not significant, commas between
    children are optional and ``#`` starts a comment.

    :param text: the description.
    :type text: str
    :raises PresentationSyntaxError: on malformed input, duplicate states or roots.
    :raises UndefinedStateError: if a referenced state is never defined.
    :raises NoRootError: if no root is declared.
    :raises BadMultiplicityError: on a zero or non-numeric multiplicity.
    :return: the validated presentation.
    :rtype: TreePresentation
    """
    try:
        tokens = _DOCUMENT.parse_string(text, parse_all=True)
    except pp.ParseException as e:
        raise PresentationSyntaxError(
            f'invalid tree description ({e.msg})',
            line=e.lineno,
            column=e.col,
        )

    states = OrderedDict()
    locations = {}
    roots = []
    for token in tokens:
        if isinstance(token, _Root):
            roots.append(token)
            continue
        if token.name in states:
            raise PresentationSyntaxError(
                f'state `{token.name}` is defined twice',
                line=token.line,
                column=token.column,
            )
        states[token.name] = token.children
        locations[token.name] = token

    if not roots:
        raise NoRootError()
    if len(roots) > 1:
        raise PresentationSyntaxError(
            'the root is declared more than once',
            line=roots[1].line,
            column=roots[1].column,
        )
    root = roots[0]
    if root.name not in states:
        raise UndefinedStateError(root.name, line=root.line, column=root.column)

    resolved = OrderedDict()
    for name, children in states.items():
        entries = []
        for child in children:
            if child.state not in states:
                raise UndefinedStateError(child.state, line=child.line, column=child.column)
            entries.append((child.state, _to_multiplicity(child)))
        resolved[name] = entries
    return TreePresentation(resolved, root.name)


def _format_state(name, entries):
    if not entries:
        return f'state {name} {{ }}'
    children = ', '.join(f'{e.state}:{e.multiplicity}' for e in entries)
    return f'state {name} {{ {children} }}'


def serialize(presentation):
    """
    Render a presentation in the description language, one state per line.

    ``parse_dsl(serialize(p)) == p`` holds for every presentation.
    """
    lines = [_format_state(name, entries) for name, entries in presentation.items()]
    if len(lines) == 1:
        return f'{lines[0]} root {presentation.root}\n'
    lines.append(f'root {presentation.root}')
    return '\n'.join(lines) + '\n'


def load(path):
    with open(path, 'r', encoding='utf-8') as fp:
        return parse_dsl(fp.read())


def dump(presentation, path):
    with open(path, 'w', encoding='utf-8') as fp:
        fp.write(serialize(presentation))
