#
# This file is part of the arbor-rank project.
#
# Copyright (c) 2026 The arbor-rank developers. All Rights Reserved.
#
from arbor.rank.embedding.finite import embeds, equimorphic_finite, rooted_embeds  # noqa
from arbor.rank.embedding.hosting import (  # noqa
    DownwardMorphism,
    HostingRelation,
    locate,
    rooted_equimorphic,
    Segment,
)
from arbor.rank.embedding.witness import (  # noqa
    core_respecting,
    EmbeddingWitness,
    EXACT,
    TRUNCATED,
    verify_witness,
)
