#
# This file is part of the arbor-rank project.
#
# Copyright (c) 2026 The arbor-rank developers. All Rights Reserved.
#
from collections import deque, namedtuple, OrderedDict
from functools import partial
from itertools import combinations

from arbor.rank.constants import DEFAULT_DEPTH, DEFAULT_MAX_VERTICES, DEFAULT_OMEGA_WIDTH
from arbor.rank.decomposition import (
    LeafyBranchShape,
    leaf_representation,
    max_leaf_distance,
)
from arbor.rank.embedding import (
    core_respecting,
    EmbeddingWitness,
    HostingRelation,
    locate,
    rooted_equimorphic,
    verify_witness,
)
from arbor.rank.exceptions import (
    EvidenceMissingError,
    InfiniteRankError,
    NoComplementRayEvidenceError,
    NotLeaflessError,
    ShapesNotPairwiseDistinctError,
    WitnessSurjectiveAtDepthError,
)
from arbor.rank.presentation import (
    ClassGraph,
    OMEGA,
    reroot,
    shape_code,
    TreePresentation,
)
from arbor.rank.pruning import rank_of_presentation, RankValue
from arbor.rank.siblings.certificates import (
    branch_profile_mismatch,
    check_certificate,
    find_certificate,
    invariant,
    BRANCH_PROFILE,
    max_leaf_distance_mismatch,
)
from arbor.rank.siblings.gallery import gallery_presentation


FamilyEvidence = namedtuple('FamilyEvidence', ('to_base', 'from_base'))
FamilyEvidence.__doc__ = """
The truncated witnesses of ``member -> base`` and ``base -> member``.
"""

ComplementRay = namedtuple('ComplementRay', ('vertex', 'image', 'start'))
ComplementRay.__doc__ = """
A vertex ``vertex`` of the source whose image ``image`` has the neighbour ``start``
outside the image of the embedding, with a ray leaving ``image`` through ``start``.
"""


class SiblingFamily:
    """
    Pairwise non-isomorphic trees, each equimorphic to ``base``.
    """

    def __init__(
        self,
        base,
        members,
        labels,
        evidence,
        certificates,
        construction,
        depth,
    ):
        self._base = base
        self._members = tuple(members)
        self._labels = tuple(labels)
        self._evidence = tuple(evidence)
        self._certificates = dict(certificates)
        self._construction = construction
        self._depth = depth

    @property
    def base(self):
        return self._base

    @property
    def members(self):
        return self._members

    @property
    def labels(self):
        return self._labels

    @property
    def evidence(self):
        return self._evidence

    @property
    def certificates(self):
        """
        The certificate of every pair ``(i, j)`` with ``i < j``, or ``None`` for an
        uncertified pair.
        """
        return self._certificates

    @property
    def construction(self):
        return self._construction

    @property
    def depth(self):
        return self._depth

    @property
    def size(self):
        return len(self._members)

    @property
    def uncertified_pairs(self):
        return [pair for pair, certificate in self._certificates.items() if certificate is None]

    @property
    def is_fully_certified(self):
        return not self.uncertified_pairs

    def validate(self):
        """
        Re-check every witness and every certificate from scratch.

        :rtype: bool
        """
        if len(set(self._members)) != len(self._members):
            return False
        for member, evidence in zip(self._members, self._evidence):
            checks = (
                (evidence.to_base, member, self._base),
                (evidence.from_base, self._base, member),
            )
            for witness, source, target in checks:
                if not verify_witness(witness, source, target):
                    return False
                if not core_respecting(witness, source, target):
                    return False
        return all(
            check_certificate(certificate, self._members[i], self._members[j])
            for (i, j), certificate in self._certificates.items()
            if certificate is not None
        )

    def __len__(self):
        return len(self._members)

    def __repr__(self):
        return (
            f'<SiblingFamily size={len(self._members)} '
            f'uncertified={len(self.uncertified_pairs)}>'
        )


def _covers(segment, copy):
    offset = copy - segment.base
    if offset < 0 or offset % segment.stride:
        return False
    return segment.count is OMEGA or offset // segment.stride < segment.count


def _free_ray_child(relation, source_state, target_state):
    target = relation.target
    rays = target.ray_states
    segments = [s for group in relation.assignment(source_state, target_state) for s in group]
    for index, entry in enumerate(target.entries(target_state)):
        if entry.state not in rays:
            continue
        used = [s for s in segments if s.target_index == index]
        if entry.multiplicity is OMEGA:
            limit = 2 + max(
                (s.base + s.stride * (1 if s.count is OMEGA else s.count) for s in used),
                default=0,
            )
        else:
            limit = entry.multiplicity
        for copy in range(limit):
            if not any(_covers(s, copy) for s in used):
                return index, copy


def find_complement_ray(morphism, depth):
    """
    Search a neighbour of the image of a downward self-embedding that lies
    outside the image and starts a ray avoiding it.

    :param morphism: the embedding.
    :type morphism: DownwardMorphism
    :param depth: vertices of the source deeper than ``depth - 1`` are not inspected.
    :type depth: int
    :rtype: ComplementRay
    """
    relation = morphism.relation
    source, target = relation.source, relation.target
    anchor = morphism.anchor
    if anchor and ClassGraph(target).classify(anchor).up_ray:
        return ComplementRay((), anchor, anchor[:-1])

    seen = set()
    queue = deque([((), source.root, anchor, target.state_of(anchor))])
    while queue:
        vertex, s, image, t = queue.popleft()
        if (s, t) in seen or len(vertex) >= depth:
            continue
        seen.add((s, t))
        free = _free_ray_child(relation, s, t)
        if free is not None:
            return ComplementRay(vertex, image, image + (free,))
        segments = relation.assignment(s, t)
        for index, entry in enumerate(source.entries(s)):
            target_index, copy = locate(segments[index], 0)
            queue.append(
                (
                    vertex + ((index, 0),),
                    entry.state,
                    image + ((target_index, copy),),
                    target.entries(t)[target_index].state,
                ),
            )


def self_embeddings(presentation, depth=DEFAULT_DEPTH):
    """
    Yields the downward self-embeddings anchored at one vertex per occurrence
    class, shallowest first, each with its complement ray or ``None``.
    """
    relation = HostingRelation(presentation, presentation)
    representatives = ClassGraph(presentation).representatives()
    for cls, anchor in sorted(representatives.items(), key=lambda item: (len(item[1]), item[1])):
        if len(anchor) > depth or not relation.holds(presentation.root, cls.state):
            continue
        morphism = relation.morphism(anchor)
        yield morphism, find_complement_ray(morphism, depth)


def ray_path(presentation, start, previous, length):
    """
    Walk ``length`` vertices from ``start`` away from ``previous``, always moving
    in a direction that contains a ray.
    """
    graph = ClassGraph(presentation)
    rays = presentation.ray_states
    path = [start]
    while len(path) < length:
        current = path[-1]
        behind = path[-2] if len(path) > 1 else previous
        path.append(_ray_step(presentation, graph, rays, current, behind))
    return path


def _ray_step(presentation, graph, rays, current, previous):
    for index, entry in enumerate(presentation.entries(presentation.state_of(current))):
        if entry.state not in rays:
            continue
        for copy in range(min(entry.multiplicity, 2)):
            child = current + ((index, copy),)
            if child != previous:
                return child
    if current and current[:-1] != previous and graph.classify(current).up_ray:
        return current[:-1]
    raise ValueError(f'no ray leaves `{current}` away from `{previous}`.')


def attach_path(presentation, vertex, length, prefix='path'):
    """
    Attach a pendant path with ``length`` new vertices at ``vertex``.

    :return: the new presentation rooted at ``vertex``, the rerooting and the index
             of the root entry starting the path.
    :rtype: tuple
    """
    if length < 1:
        raise ValueError('`length` must be a positive integer.')
    rerooting = reroot(presentation, vertex)
    rerooted = rerooting.presentation
    entries = list(rerooted.entries(rerooted.root))
    names = []
    for position in range(1, length + 1):
        names.append(rerooted.fresh_name(f'{prefix}{position}', names))
    states = OrderedDict([(rerooted.root, entries + [(names[0], 1)])])
    for position, name in enumerate(names):
        states[name] = [(names[position + 1], 1)] if position + 1 < length else []
    return rerooted.replace(states), rerooting, len(entries)


def _onto_ray(morphism, rerooting, chain_index, path, vertex):
    if vertex and vertex[0][0] == chain_index:
        return path[len(vertex) - 1]
    return morphism(rerooting.untranslate(vertex))


def _through(first, second, vertex):
    return second(first(vertex))


def _attach_family(
    presentation,
    morphism,
    complement,
    lengths,
    bound,
    depth,
    width,
    construction,
    logger,
    max_vertices=DEFAULT_MAX_VERTICES,
):
    members, evidence, distances = [], [], []
    for length in lengths:
        member, rerooting, chain_index = attach_path(presentation, complement.vertex, length)
        path = ray_path(presentation, complement.start, complement.image, length)
        to_base = EmbeddingWitness.truncated(
            partial(_onto_ray, morphism, rerooting, chain_index, path),
            member,
            presentation,
            depth,
            width=width,
            note='the self-embedding extended along a ray outside its image',
            max_vertices=max_vertices,
        )
        from_base = EmbeddingWitness.truncated(
            rerooting.translate,
            presentation,
            member,
            depth,
            width=width,
            note='inclusion of the base',
            max_vertices=max_vertices,
        )
        members.append(member)
        evidence.append(FamilyEvidence(to_base, from_base))
        distances.append(max_leaf_distance(leaf_representation(member)))
        if logger:
            logger.log_step(
                'Sibling',
                path_length=length,
                max_leaf_distance=distances[-1],
                states=len(member),
            )

    certificates = {}
    for i, j in combinations(range(len(members)), 2):
        certificate = None
        if min(lengths[i], lengths[j]) > bound and distances[i] != distances[j]:
            certificate = max_leaf_distance_mismatch(distances[i], distances[j])
        certificates[(i, j)] = certificate
    return SiblingFamily(
        presentation,
        members,
        lengths,
        evidence,
        certificates,
        construction,
        depth,
    )


def _complement_for(presentation, morphism, depth):
    if morphism is not None:
        return morphism, find_complement_ray(morphism, depth)
    for candidate, complement in self_embeddings(presentation, depth):
        if complement is not None:
            return candidate, complement
    return None, None


def leafless_family(
    presentation,
    morphism=None,
    n_max=3,
    depth=DEFAULT_DEPTH,
    width=DEFAULT_OMEGA_WIDTH,
    offset=0,
    logger=None,
    max_vertices=DEFAULT_MAX_VERTICES,
):
    """
    Generate siblings of a leafless tree by attaching paths of growing length.

    For a self-embedding ``f`` whose image misses a neighbour of ``f(x)``, the
    members are the base with a pendant path of length ``offset + 1`` up to
    ``offset + n_max`` attached at ``x``. The member embeds into the base through
    ``f``, the path running along a ray outside the image of ``f``.

    :param presentation: a leafless tree.
    :type presentation: TreePresentation
    :param morphism: a downward self-embedding, searched when None.
    :type morphism: DownwardMorphism, optional
    :param n_max: the number of members.
    :type n_max: int
    :param depth: the depth of the witnesses.
    :type depth: int
    :param width: the number of materialised copies of ``OMEGA`` entries.
    :type width: int
    :param offset: the length of the shortest path minus one.
    :type offset: int
    :param logger: an optional logger.
    :type logger: AnalysisLogger
    :param max_vertices: the largest truncation a witness may materialise.
    :type max_vertices: int
    :raises NotLeaflessError: if the tree is not leafless.
    :raises WitnessSurjectiveAtDepthError: if the embedding misses no ray.
    :raises BudgetExceededError: if a witness truncation exceeds ``max_vertices``.
    :rtype: SiblingFamily
    """
    if rank_of_presentation(presentation) != RankValue.finite(0):
        raise NotLeaflessError()
    morphism, complement = _complement_for(presentation, morphism, depth)
    if complement is None:
        raise WitnessSurjectiveAtDepthError()
    if logger:
        logger.log_step('Leafless family', attachment=complement.vertex, image=complement.image)
    return _attach_family(
        presentation,
        morphism,
        complement,
        list(range(offset + 1, offset + n_max + 1)),
        0,
        depth,
        width,
        'base -> image of the self-embedding -> member -> base',
        logger,
        max_vertices=max_vertices,
    )


def path_attach_family(
    presentation,
    morphism=None,
    n_max=3,
    depth=DEFAULT_DEPTH,
    width=DEFAULT_OMEGA_WIDTH,
    offset=0,
    complement=None,
    logger=None,
    max_vertices=DEFAULT_MAX_VERTICES,
):
    """
    Generate siblings of a tree of finite rank from a self-embedding whose
    complement contains a ray.

    Pairs whose path lengths do not both exceed the rank are left uncertified.

    :raises InfiniteRankError: if the rank is omega.
    :raises NoComplementRayEvidenceError: if no ray outside the image is found.
    :rtype: SiblingFamily
    """
    rank = rank_of_presentation(presentation)
    if not rank.is_finite:
        raise InfiniteRankError()
    if complement is None:
        morphism, complement = _complement_for(presentation, morphism, depth)
    if complement is None or morphism is None:
        raise NoComplementRayEvidenceError()
    if logger:
        logger.log_step(
            'Path attach family',
            rank=rank,
            attachment=complement.vertex,
            image=complement.image,
        )
    family = _attach_family(
        presentation,
        morphism,
        complement,
        list(range(offset + 1, offset + n_max + 1)),
        rank.value,
        depth,
        width,
        'base -> member -> base, the path sent along a ray outside the image',
        logger,
        max_vertices=max_vertices,
    )
    for member, evidence in zip(family.members, family.evidence):
        if not verify_witness(evidence.to_base, member, presentation):
            raise NoComplementRayEvidenceError()
    return family


def _merge_shape(base, shape, tag, taken):
    names = {}
    for state in shape.states:
        names[state] = base.fresh_name(f'{state}.{tag}', taken)
        taken.add(names[state])
    states = OrderedDict(
        (names[state], [(names[e.state], e.multiplicity) for e in shape.entries(state)])
        for state in shape.states
    )
    return states, states[names[shape.root]]


def _resolve_branch(representation, branch):
    if isinstance(branch, TreePresentation):
        return branch
    if isinstance(branch, LeafyBranchShape):
        return branch.shape
    for shape, _ in representation.branches:
        if shape.code == branch:
            return shape.shape
    raise ValueError(f'`{branch}` is not a leafy branch of the tree.')


def branch_swap_family(
    presentation,
    branch,
    sibling_shapes,
    n_max=None,
    depth=DEFAULT_DEPTH,
    width=DEFAULT_OMEGA_WIDTH,
    logger=None,
):
    """
    Generate siblings by replacing every leafy branch equimorphic to ``branch``
    with one of ``sibling_shapes``.

    :param presentation: a tree with a non-empty core.
    :type presentation: TreePresentation
    :param branch: the branch, by shape code, shape or presentation.
    :type branch: str
    :param sibling_shapes: rooted shapes equimorphic to the branch, pairwise
                           non-isomorphic.
    :type sibling_shapes: list
    :param n_max: use only the first ``n_max`` shapes, defaults to all.
    :type n_max: int, optional
    :raises NoCoreError: if the tree has no core.
    :raises ShapesNotPairwiseDistinctError: if two shapes have the same code.
    :raises EvidenceMissingError: if a shape is not equimorphic to the branch.
    :rtype: SiblingFamily
    """
    representation = leaf_representation(presentation)
    target = _resolve_branch(representation, branch)
    shapes = list(sibling_shapes)[:n_max] if n_max else list(sibling_shapes)
    codes = [shape_code(shape) for shape in shapes]
    if len(set(codes)) != len(codes):
        raise ShapesNotPairwiseDistinctError()
    for shape in shapes:
        if not rooted_equimorphic(target, shape):
            raise EvidenceMissingError()

    rerooted = representation.rerooted
    rays = rerooted.ray_states
    group = OrderedDict()
    for leafy, _ in representation.branches:
        if rooted_equimorphic(leafy.shape, target):
            group[leafy.attachment_class.state] = None
    if logger:
        logger.log_step('Branch swap family', branches=len(group), shapes=len(shapes))

    members, evidence = [], []
    for position, shape in enumerate(shapes):
        taken = set(rerooted.states)
        states, root_entries = _merge_shape(rerooted, shape, f's{position}', taken)
        overrides = OrderedDict(
            (
                state,
                [e for e in rerooted.entries(state) if e.state in rays] + root_entries,
            )
            for state in group
        )
        overrides.update(states)
        member = rerooted.replace(overrides)
        into = HostingRelation(rerooted, member)
        back = HostingRelation(member, rerooted)
        if not (into.holds() and back.holds()):
            raise EvidenceMissingError()
        rerooting = representation.rerooting
        members.append(member)
        evidence.append(
            FamilyEvidence(
                EmbeddingWitness.truncated(
                    partial(_through, back.morphism(), rerooting.untranslate),
                    member,
                    presentation,
                    depth,
                    width=width,
                    note='replaced branches sent into the original ones',
                ),
                EmbeddingWitness.truncated(
                    partial(_through, rerooting.translate, into.morphism()),
                    presentation,
                    member,
                    depth,
                    width=width,
                    note='original branches sent into the replacing ones',
                ),
            ),
        )

    certificates = {}
    for i, j in combinations(range(len(members)), 2):
        first = invariant(BRANCH_PROFILE, members[i], codes[i])
        second = invariant(BRANCH_PROFILE, members[j], codes[i])
        if first != second:
            certificates[(i, j)] = branch_profile_mismatch(codes[i], first, second)
        else:
            certificates[(i, j)] = find_certificate(members[i], members[j])
    return SiblingFamily(
        presentation,
        members,
        codes,
        evidence,
        certificates,
        'each branch equimorphic to the replaced one embeds both ways, root onto root',
        depth,
    )


def pendant_state_ok(presentation, state):
    """
    True iff ``state`` has an ``OMEGA`` entry whose child has children, and finitely
    many leaf children.
    """
    entries = presentation.entries(state)
    leaves = [e for e in entries if not presentation.entries(e.state)]
    if any(e.multiplicity is OMEGA for e in leaves):
        return False
    return any(
        e.multiplicity is OMEGA and presentation.entries(e.state)
        for e in entries
    )


def pendant_family(presentation, state, n_max, depth=DEFAULT_DEPTH, width=DEFAULT_OMEGA_WIDTH,
                   logger=None):
    """
    Generate siblings by adding ``k`` leaves, ``0 <= k < n_max``, at one occurrence of
    ``state``. The leaves embed into spare copies of an ``OMEGA`` child of ``state``.

    :raises EvidenceMissingError: if ``state`` has no ``OMEGA`` child with children.
    :rtype: SiblingFamily
    """
    if state not in presentation.states or not pendant_state_ok(presentation, state):
        raise EvidenceMissingError(
            f'`{state}` has no countably many non-leaf children to absorb new leaves',
        )
    representatives = ClassGraph(presentation).representatives()
    vertex = min(
        (v for cls, v in representatives.items() if cls.state == state),
        key=lambda v: (len(v), v),
    )
    rerooting = reroot(presentation, vertex)
    rerooted = rerooting.presentation
    leaf = rerooted.fresh_name('leaf')
    entries = list(rerooted.entries(rerooted.root))

    members, evidence = [], []
    for count in range(n_max):
        if count:
            member = rerooted.replace(
                OrderedDict([(rerooted.root, entries + [(leaf, count)]), (leaf, [])]),
            )
        else:
            member = rerooted
        back = HostingRelation(member, rerooted)
        members.append(member)
        evidence.append(
            FamilyEvidence(
                EmbeddingWitness.truncated(
                    partial(_through, back.morphism(), rerooting.untranslate),
                    member,
                    presentation,
                    depth,
                    width=width,
                    note='new leaves sent to spare children',
                ),
                EmbeddingWitness.truncated(
                    rerooting.translate,
                    presentation,
                    member,
                    depth,
                    width=width,
                    note='inclusion of the base',
                ),
            ),
        )
        if logger:
            logger.log_step('Sibling', leaves=count, states=len(member))

    certificates = {
        (i, j): find_certificate(members[i], members[j])
        for i, j in combinations(range(len(members)), 2)
    }
    return SiblingFamily(
        presentation,
        members,
        list(range(n_max)),
        evidence,
        certificates,
        'extra leaves embed into spare children, the base embeds by inclusion',
        depth,
    )


def star_family(n_max, depth=4, width=DEFAULT_OMEGA_WIDTH, logger=None):
    """
    The siblings of the star of paths of length two: the root gets ``k`` extra
    pendant edges, ``0 <= k < n_max``.
    """
    if n_max < 1:
        raise ValueError('`n_max` must be a positive integer.')
    return pendant_family(
        gallery_presentation('star'),
        'r',
        n_max,
        depth=depth,
        width=width,
        logger=logger,
    )
