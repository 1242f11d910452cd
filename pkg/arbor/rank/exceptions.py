#
# This file is part of the arbor-rank project.
#
# Copyright (c) 2026 The arbor-rank developers. All Rights Reserved.
#
EXIT_PARSE_ERROR = 2
EXIT_VALIDATION_ERROR = 3
EXIT_NOT_APPLICABLE = 4
EXIT_GENERATOR_ERROR = 5


class ArborError(Exception):
    code = 'error'
    description = 'Unexpected error'
    exit_code = 1

    def __init__(self, message=None, **kwargs):
        self.message = message
        self.details = kwargs
        for name, value in kwargs.items():
            setattr(self, name, value)

    def __repr__(self):
        return f'<{self.__class__.__name__} {self.code}>'

    def __str__(self):
        message = self.message or self.description
        location = self._get_location()
        if location:
            return f'{location}: {message}'
        return message

    def _get_location(self):
        line = self.details.get('line')
        if not line:
            return
        column = self.details.get('column')
        if column:
            return f'line {line}, column {column}'
        return f'line {line}'


class NotATreeError(ArborError):
    code = 'not-a-tree'
    exit_code = EXIT_VALIDATION_ERROR
    REASONS = ('cycle', 'disconnected', 'duplicate-edge', 'self-loop')

    def __init__(self, reason, message=None, **kwargs):
        if reason not in self.REASONS:
            raise ValueError(f'`reason` must be one of {", ".join(self.REASONS)}.')
        super().__init__(message or f'the edges do not form a tree ({reason})', **kwargs)
        self.reason = reason


class EmptyTreeError(ArborError):
    code = 'empty-tree'
    description = 'the tree has no vertices'
    exit_code = EXIT_VALIDATION_ERROR


class PresentationError(ArborError):
    code = 'invalid-presentation'
    exit_code = EXIT_VALIDATION_ERROR


class PresentationSyntaxError(PresentationError):
    code = 'syntax'
    description = 'invalid tree description'
    exit_code = EXIT_PARSE_ERROR


class UndefinedStateError(PresentationError):
    code = 'undefined-state'

    def __init__(self, state, **kwargs):
        super().__init__(f'state `{state}` is referenced but never defined', **kwargs)
        self.state = state


class NoRootError(PresentationError):
    code = 'no-root'
    description = 'the description does not declare a root state'


class BadMultiplicityError(PresentationError):
    code = 'bad-multiplicity'

    def __init__(self, value, **kwargs):
        super().__init__(
            f'`{value}` is not a multiplicity (a positive integer or `w`)',
            **kwargs,
        )
        self.value = value


class BudgetExceededError(ArborError):
    code = 'budget-exceeded'
    description = 'the unfolding exceeds the vertex budget'
    exit_code = EXIT_VALIDATION_ERROR


class NoCoreError(ArborError):
    code = 'no-core'
    description = 'leaf representation not applicable'
    exit_code = EXIT_NOT_APPLICABLE


class DepthExceedsWitnessError(ArborError):
    code = 'depth-exceeds-witness'
    exit_code = EXIT_VALIDATION_ERROR

    def __init__(self, depth, witness_depth, **kwargs):
        super().__init__(
            f'cannot verify at depth {depth}, the witness covers depth {witness_depth}',
            **kwargs,
        )


class FamilyError(ArborError):
    code = 'family'
    description = 'the sibling family cannot be generated'
    exit_code = EXIT_GENERATOR_ERROR


class NotLeaflessError(FamilyError):
    code = 'not-leafless'
    description = 'the tree is not leafless'


class WitnessSurjectiveAtDepthError(FamilyError):
    code = 'witness-surjective'
    description = 'the embedding leaves no uncovered ray within the verified depth'


class InfiniteRankError(FamilyError):
    code = 'infinite-rank'
    description = 'the tree has infinite rank'


class NoComplementRayEvidenceError(FamilyError):
    code = 'no-complement-ray'
    description = 'no ray outside the image of the embedding was found'


class EvidenceMissingError(FamilyError):
    code = 'evidence-missing'
    description = 'a sibling shape is not equimorphic to the branch it replaces'


class ShapesNotPairwiseDistinctError(FamilyError):
    code = 'shapes-not-distinct'
    description = 'the sibling shapes are not pairwise non-isomorphic'
