#
# This file is part of the arbor-rank project.
#
# Copyright (c) 2026 The arbor-rank developers. All Rights Reserved.
#
from arbor.rank.siblings.certificates import (  # noqa
    check_certificate,
    find_certificate,
    NonIsoCertificate,
)
from arbor.rank.siblings.families import (  # noqa
    attach_path,
    branch_swap_family,
    ComplementRay,
    FamilyEvidence,
    find_complement_ray,
    leafless_family,
    path_attach_family,
    pendant_family,
    pendant_state_ok,
    ray_path,
    self_embeddings,
    SiblingFamily,
    star_family,
)
from arbor.rank.siblings.gallery import gallery, gallery_presentation, GalleryEntry  # noqa
from arbor.rank.siblings.manifest import family_to_json, write_family  # noqa
