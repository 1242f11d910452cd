import io
import json

import pytest

from arbor.rank.analyzer import (
    analyze,
    Budget,
    check_condition1,
    check_condition3,
    COMPLEMENT_RAY,
    FINITE_TREE,
    FINITELY_MANY_BRANCHES,
    LEAFLESS_DICHOTOMY,
    NO_APPLICABLE_RESULT,
    Outcome,
    RAYLESS_DICHOTOMY,
    ROOTED_BRANCH_SIBLINGS,
    Verdict,
)
from arbor.rank.logger import AnalysisLogger
from arbor.rank.presentation import parse_dsl, shape_code


def test_budget_defaults():
    assert Budget() == Budget(10, 100000)
    assert Budget(depth=3).max_vertices == 100000


def test_outcome_str():
    assert str(Outcome.DICHOTOMY_HOLDS) == 'DichotomyHolds'


def test_analyze_finite(path_factory):
    verdict = analyze(path_factory(5))
    assert verdict.outcome == Outcome.EXACTLY_ONE
    assert verdict.justification == FINITE_TREE
    assert verdict.evidence is None
    assert verdict.budget_used == 0
    assert str(verdict) == 'ExactlyOne (finite tree)'


def test_analyze_star(presentation_factory):
    verdict = analyze(presentation_factory('star'))
    assert verdict.outcome == Outcome.INFINITE
    assert verdict.justification == ROOTED_BRANCH_SIBLINGS
    assert verdict.evidence.size == 3
    assert verdict.evidence.is_fully_certified
    assert verdict.budget_used == 1


def test_analyze_star_family_size(presentation_factory):
    verdict = analyze(presentation_factory('star'), family_size=5)
    assert verdict.evidence.size == 5


def test_analyze_rayless_without_siblings():
    p = parse_dsl('state r { m:w } state m { } root r')
    verdict = analyze(p)
    assert verdict.outcome == Outcome.DICHOTOMY_HOLDS
    assert verdict.justification == RAYLESS_DICHOTOMY


def test_analyze_binary(presentation_factory):
    verdict = analyze(presentation_factory('binary'), depth=6)
    assert verdict.outcome == Outcome.INFINITE
    assert verdict.justification == LEAFLESS_DICHOTOMY
    assert verdict.budget_used == 2
    assert verdict.evidence.size == 3
    assert verdict.evidence.validate()


def test_analyze_double_ray(presentation_factory):
    verdict = analyze(presentation_factory('double_ray'), depth=6)
    assert verdict.outcome == Outcome.DICHOTOMY_HOLDS
    assert verdict.justification == LEAFLESS_DICHOTOMY
    assert verdict.evidence is None
    assert verdict.budget_used == 1


@pytest.mark.parametrize('name', ('ray', 'comb'))
def test_analyze_one_end(presentation_factory, name):
    verdict = analyze(presentation_factory(name))
    assert verdict.outcome == Outcome.UNKNOWN
    assert verdict.justification == NO_APPLICABLE_RESULT


def test_analyze_complement_ray(presentation_factory):
    verdict = analyze(presentation_factory('leafy_binary'), depth=5)
    assert verdict.outcome == Outcome.INFINITE
    assert verdict.justification == COMPLEMENT_RAY
    assert list(verdict.evidence.labels) == [2, 3, 4]
    assert verdict.budget_used == 2


def test_analyze_branch_siblings(presentation_factory):
    verdict = analyze(presentation_factory('star_on_double_ray'), depth=5)
    assert verdict.outcome == Outcome.INFINITE
    assert verdict.justification == ROOTED_BRANCH_SIBLINGS
    assert verdict.evidence.size == 3


def test_analyze_finitely_many_branches(presentation_factory):
    verdict = analyze(presentation_factory('double_ray_pendant'), depth=5)
    assert verdict.outcome == Outcome.DICHOTOMY_HOLDS
    assert verdict.justification == FINITELY_MANY_BRANCHES
    assert 'single sibling' in verdict.note


def test_analyze_unknown(presentation_factory):
    verdict = analyze(presentation_factory('double_ray_comb'), depth=5)
    assert verdict.outcome == Outcome.UNKNOWN
    assert verdict.justification == NO_APPLICABLE_RESULT


def test_analyze_budget_exceeded(presentation_factory):
    verdict = analyze(presentation_factory('binary'), budget=Budget(10, 50), depth=12)
    assert verdict.outcome == Outcome.DICHOTOMY_HOLDS
    assert verdict.justification == LEAFLESS_DICHOTOMY
    assert verdict.evidence is None
    assert 'exceeds 50 vertices' in verdict.note


@pytest.mark.parametrize(
    'text',
    (
        'state r { q:3 } state q { q:3 } root r',
        'state r { q:w } state q { q:w } root r',
    ),
)
def test_analyze_wide_leafless_trees(text):
    verdict = analyze(parse_dsl(text))
    assert verdict.outcome == Outcome.DICHOTOMY_HOLDS
    assert verdict.justification == LEAFLESS_DICHOTOMY
    assert 'exceeds 100000 vertices' in verdict.note


@pytest.mark.parametrize(
    'text',
    (
        'state r { q:3 } state q { q:3 } root r',
        'state r { q:w } state q { q:w } root r',
    ),
)
def test_analyze_wide_leafless_trees_within_budget(text):
    verdict = analyze(parse_dsl(text), depth=4)
    assert verdict.outcome in (Outcome.INFINITE, Outcome.DICHOTOMY_HOLDS)
    assert verdict.justification == LEAFLESS_DICHOTOMY


def test_analyze_logs(presentation_factory):
    log = io.StringIO()
    analyze(presentation_factory('binary'), depth=4, logger=AnalysisLogger(file=log))
    output = log.getvalue()
    assert '--- Tree ---' in output
    assert 'ends: ManyEnds' in output
    assert '--- Verdict ---' in output
    assert '"outcome": "Infinite"' in output


def test_verdict_to_json(presentation_factory):
    verdict = analyze(presentation_factory('star'))
    data = verdict.to_json()
    assert list(data) == ['outcome', 'justification', 'budget_used', 'evidence']
    assert data['outcome'] == 'Infinite'
    assert data['evidence']['size'] == 3
    assert Verdict(Outcome.UNKNOWN, NO_APPLICABLE_RESULT, note='n').to_json() == {
        'outcome': 'Unknown',
        'justification': NO_APPLICABLE_RESULT,
        'budget_used': 0,
        'note': 'n',
    }


@pytest.mark.parametrize(
    ('name', 'depth'),
    (
        ('star', 4),
        ('binary', 6),
        ('double_ray', 6),
        ('ray', 4),
        ('leafy_binary', 5),
        ('star_on_double_ray', 5),
        ('double_ray_pendant', 5),
        ('double_ray_comb', 5),
    ),
)
def test_verdict_follows_schema(presentation_factory, schema_validator, name, depth):
    data = json.loads(json.dumps(analyze(presentation_factory(name), depth=depth).to_json()))
    schema_validator('verdict').validate(data)
    if 'evidence' in data:
        schema_validator('manifest').validate(data['evidence'])


def test_verdict_without_evidence_follows_schema(path_factory, schema_validator):
    validator = schema_validator('verdict')
    validator.validate(json.loads(json.dumps(analyze(path_factory(3)).to_json())))
    over_budget = analyze(parse_dsl('state r { q:3 } state q { q:3 } root r'))
    validator.validate(json.loads(json.dumps(over_budget.to_json())))


def test_check_condition1_rayless(presentation_factory):
    evidence = check_condition1(presentation_factory('star'))
    assert evidence.branch is None
    assert (evidence.state, evidence.child) == ('r', 'm')
    assert [shape_code(s) for s in evidence.shapes] == ['((())*)', '((())*())', '((())*()())']


def test_check_condition1_branch(presentation_factory):
    evidence = check_condition1(presentation_factory('star_on_double_ray'), n_max=2)
    assert evidence.branch.code == '((())*)'
    assert (evidence.state, evidence.child) == ('m.branch', 's')
    assert len(evidence.shapes) == 2


@pytest.mark.parametrize('name', ('binary', 'comb', 'double_ray_pendant'))
def test_check_condition1_absent(presentation_factory, name):
    assert check_condition1(presentation_factory(name)) is None


def test_check_condition3(presentation_factory):
    evidence = check_condition3(presentation_factory('double_ray_pendant'))
    assert evidence.branch_count == 1
    assert evidence.note


@pytest.mark.parametrize('name', ('double_ray_comb', 'comb', 'star', 'leafy_binary'))
def test_check_condition3_fails(presentation_factory, name):
    assert check_condition3(presentation_factory(name)) is None


def test_check_condition3_without_note(presentation_factory):
    evidence = check_condition3(presentation_factory('star_on_double_ray'))
    assert evidence.branch_count == 1
    assert evidence.note is None


def test_check_condition1_root_with_leaves(presentation_factory):
    evidence = check_condition1(presentation_factory('wide_star'))
    assert (evidence.state, evidence.child) == ('r', 'm')
