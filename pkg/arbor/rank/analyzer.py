#
# This file is part of the arbor-rank project.
#
# Copyright (c) 2026 The arbor-rank developers. All Rights Reserved.
#
from collections import namedtuple, OrderedDict
from enum import Enum

from arbor.rank.constants import (
    DEFAULT_BUDGET_DEPTH,
    DEFAULT_DEPTH,
    DEFAULT_MAX_VERTICES,
    DEFAULT_OMEGA_WIDTH,
)
from arbor.rank.decomposition import branch_count, leaf_representation
from arbor.rank.exceptions import BudgetExceededError, FamilyError
from arbor.rank.presentation import OMEGA, shape_code
from arbor.rank.pruning import end_category, EndCategory, rank_of_presentation
from arbor.rank.siblings import (
    branch_swap_family,
    family_to_json,
    leafless_family,
    path_attach_family,
    pendant_family,
    pendant_state_ok,
    self_embeddings,
)


FINITE_TREE = 'finite tree'
RAYLESS_DICHOTOMY = 'rayless dichotomy'
LEAFLESS_DICHOTOMY = 'leafless dichotomy'
ROOTED_BRANCH_SIBLINGS = 'rooted branch siblings'
COMPLEMENT_RAY = 'complement ray'
FINITELY_MANY_BRANCHES = 'finitely many leafy branches'
NO_APPLICABLE_RESULT = 'no applicable result'

MIN_FAMILY_SIZE = 3


class Outcome(str, Enum):
    EXACTLY_ONE = 'ExactlyOne'
    INFINITE = 'Infinite'
    DICHOTOMY_HOLDS = 'DichotomyHolds'
    UNKNOWN = 'Unknown'

    def __str__(self):
        return self.value


Budget = namedtuple('Budget', ('depth', 'max_vertices'))
Budget.__new__.__defaults__ = (DEFAULT_BUDGET_DEPTH, DEFAULT_MAX_VERTICES)

Condition1Evidence = namedtuple('Condition1Evidence', ('branch', 'state', 'child', 'shapes'))
Condition1Evidence.__doc__ = """
A vertex class whose subtree has infinitely many rooted siblings: ``state`` has
countably many copies of the non-trivial shape ``child`` and finitely many leaves,
so adding leaves at ``state`` yields the pairwise distinct ``shapes``. ``branch`` is
the leafy branch holding ``state``, or None for a rayless tree.
"""

Condition3Evidence = namedtuple('Condition3Evidence', ('branch_count', 'note'))


class Verdict:
    """
    The conclusion of :func:`analyze` on the number of siblings of a tree.
    """

    def __init__(self, outcome, justification, evidence=None, budget_used=0, note=None):
        self._outcome = outcome
        self._justification = justification
        self._evidence = evidence
        self._budget_used = budget_used
        self._note = note

    @property
    def outcome(self):
        return self._outcome

    @property
    def justification(self):
        return self._justification

    @property
    def evidence(self):
        """
        The sibling family backing an ``Infinite`` outcome, None otherwise.
        """
        return self._evidence

    @property
    def budget_used(self):
        return self._budget_used

    @property
    def note(self):
        return self._note

    def to_json(self):
        data = OrderedDict(
            [
                ('outcome', str(self._outcome)),
                ('justification', self._justification),
                ('budget_used', self._budget_used),
            ],
        )
        if self._note:
            data['note'] = self._note
        if self._evidence is not None:
            data['evidence'] = family_to_json(self._evidence)
        return data

    def __str__(self):
        return f'{self._outcome} ({self._justification})'

    def __repr__(self):
        return f'<Verdict {self._outcome} ({self._justification})>'


def _with_leaves(shape, state, count):
    if not count:
        return shape
    leaf = shape.fresh_name('leaf')
    entries = list(shape.entries(state)) + [(leaf, count)]
    return shape.replace(OrderedDict([(state, entries), (leaf, [])]))


def _condition1_in(shape, branch, n_max):
    for state in shape.states:
        if not pendant_state_ok(shape, state):
            continue
        child = next(
            e.state for e in shape.entries(state)
            if e.multiplicity is OMEGA and shape.entries(e.state)
        )
        shapes, codes = [], set()
        for count in range(n_max):
            candidate = _with_leaves(shape, state, count)
            code = shape_code(candidate)
            if code not in codes:
                codes.add(code)
                shapes.append(candidate)
        return Condition1Evidence(branch, state, child, shapes)


def check_condition1(presentation, n_max=MIN_FAMILY_SIZE):
    """
    Look for a vertex class with infinitely many rooted siblings inside a leafy
    branch, or inside a rayless tree.

    The search only recognises a state with countably many copies of a non-trivial
    child and finitely many leaf children. Not finding one proves nothing.

    :return: the evidence, or None.
    :rtype: Condition1Evidence
    """
    category = end_category(presentation)
    if category == EndCategory.ZERO_ENDS:
        return _condition1_in(presentation, None, n_max)
    if category != EndCategory.MANY_ENDS:
        return None
    for branch, _ in leaf_representation(presentation).branches:
        evidence = _condition1_in(branch.shape, branch, n_max)
        if evidence is not None:
            return evidence


def check_condition3(presentation, budget=None):
    """
    Check for finite rank with finitely many leafy branches.

    When additionally every leafy branch is finite and no embedding leaving a ray
    uncovered is found within ``budget``, the evidence carries a note that the tree
    likely has a single sibling. This is never turned into a verdict.

    :return: the evidence, or None when the condition fails.
    :rtype: Condition3Evidence
    """
    budget = budget or Budget()
    if end_category(presentation) != EndCategory.MANY_ENDS:
        return None
    if not rank_of_presentation(presentation).is_finite:
        return None
    representation = leaf_representation(presentation)
    count = branch_count(representation)
    if not isinstance(count, int):
        return None
    note = None
    finite_branches = all(branch.shape.is_finite() for branch, _ in representation.branches)
    if finite_branches and not any(
        complement is not None
        for _, complement in self_embeddings(presentation, budget.depth)
    ):
        note = (
            'no embedding leaving a ray uncovered was found and every leafy branch is '
            'finite, a single sibling is likely'
        )
    return Condition3Evidence(count, note)


class _Analysis:

    def __init__(self, presentation, budget, depth, width, family_size, logger):
        self.presentation = presentation
        self.budget = budget
        self.depth = depth
        self.width = width
        self.family_size = max(family_size, MIN_FAMILY_SIZE)
        self.logger = logger
        self.used = 0

    def log(self, title, **details):
        if self.logger:
            self.logger.log_step(title, **details)

    def verdict(self, outcome, justification, evidence=None, note=None):
        verdict = Verdict(outcome, justification, evidence, self.used, note)
        if self.logger:
            self.logger.log_result('Verdict', verdict.to_json())
        return verdict

    def complements(self):
        for morphism, complement in self_embeddings(self.presentation, self.budget.depth):
            self.used += 1
            self.log('Self-embedding', anchor=morphism.anchor, complement=complement)
            if complement is not None:
                yield morphism, complement

    def certified(self, family):
        return family.size >= MIN_FAMILY_SIZE and family.is_fully_certified

    def rooted_siblings(self):
        evidence = check_condition1(self.presentation, self.family_size)
        if evidence is None or len(evidence.shapes) < MIN_FAMILY_SIZE:
            return None
        self.used += 1
        self.log('Rooted siblings', state=evidence.state, child=evidence.child)
        try:
            if evidence.branch is None:
                family = pendant_family(
                    self.presentation,
                    evidence.state,
                    self.family_size,
                    depth=self.depth,
                    width=self.width,
                    logger=self.logger,
                )
            else:
                family = branch_swap_family(
                    self.presentation,
                    evidence.branch,
                    evidence.shapes,
                    depth=self.depth,
                    width=self.width,
                    logger=self.logger,
                )
        except FamilyError as e:
            self.log('Rooted siblings rejected', reason=e)
            return None
        return family if self.certified(family) else None

    def leafless(self):
        try:
            for morphism, _ in self.complements():
                family = leafless_family(
                    self.presentation,
                    morphism,
                    n_max=self.family_size,
                    depth=self.depth,
                    width=self.width,
                    logger=self.logger,
                    max_vertices=self.budget.max_vertices,
                )
                return self.verdict(Outcome.INFINITE, LEAFLESS_DICHOTOMY, family)
        except (BudgetExceededError, FamilyError) as e:
            self.log('Leafless family rejected', reason=e)
            return self.verdict(Outcome.DICHOTOMY_HOLDS, LEAFLESS_DICHOTOMY, note=str(e))
        return self.verdict(Outcome.DICHOTOMY_HOLDS, LEAFLESS_DICHOTOMY)

    def run(self):
        p = self.presentation
        if p.is_finite():
            return self.verdict(Outcome.EXACTLY_ONE, FINITE_TREE)

        category = end_category(p)
        rank = rank_of_presentation(p)
        self.log('Tree', ends=category, rank=rank)
        if category == EndCategory.ONE_END:
            return self.verdict(Outcome.UNKNOWN, NO_APPLICABLE_RESULT)

        if category == EndCategory.ZERO_ENDS:
            family = self.rooted_siblings()
            if family is not None:
                return self.verdict(Outcome.INFINITE, ROOTED_BRANCH_SIBLINGS, family)
            return self.verdict(Outcome.DICHOTOMY_HOLDS, RAYLESS_DICHOTOMY)

        if rank.value == 0:
            return self.leafless()

        family = self.rooted_siblings()
        if family is not None:
            return self.verdict(Outcome.INFINITE, ROOTED_BRANCH_SIBLINGS, family)

        for morphism, complement in self.complements():
            try:
                family = path_attach_family(
                    p,
                    morphism,
                    n_max=self.family_size,
                    depth=self.depth,
                    width=self.width,
                    offset=rank.value,
                    complement=complement,
                    logger=self.logger,
                    max_vertices=self.budget.max_vertices,
                )
            except (BudgetExceededError, FamilyError) as e:
                self.log('Complement ray rejected', reason=e)
                continue
            if self.certified(family):
                return self.verdict(Outcome.INFINITE, COMPLEMENT_RAY, family)

        condition = check_condition3(p, self.budget)
        if condition is not None:
            return self.verdict(
                Outcome.DICHOTOMY_HOLDS,
                FINITELY_MANY_BRANCHES,
                note=condition.note,
            )
        return self.verdict(Outcome.UNKNOWN, NO_APPLICABLE_RESULT)


def analyze(
    presentation,
    budget=None,
    depth=DEFAULT_DEPTH,
    width=DEFAULT_OMEGA_WIDTH,
    family_size=MIN_FAMILY_SIZE,
    logger=None,
):
    """
    Decide what is known about the number of siblings of a tree.

    Finite trees have exactly one sibling. For infinite trees the analysis looks
    for a certified family of at least three siblings, and otherwise names the
    known result under which the tree has either one or infinitely many siblings.

    :param presentation: the tree.
    :type presentation: TreePresentation
    :param budget: limits of the embedding search, defaults to ``Budget()``.
    :type budget: Budget, optional
    :param depth: the depth of the witnesses of the attached family.
    :type depth: int
    :param width: the number of materialised copies of ``OMEGA`` entries.
    :type width: int
    :param family_size: the size of the attached family.
    :type family_size: int
    :param logger: an optional logger.
    :type logger: AnalysisLogger
    :return: the verdict.
    :rtype: Verdict
    """
    analysis = _Analysis(presentation, budget or Budget(), depth, width, family_size, logger)
    try:
        return analysis.run()
    except BudgetExceededError as e:
        return analysis.verdict(Outcome.UNKNOWN, NO_APPLICABLE_RESULT, note=str(e))
