from tests.fixtures.schemas import schema_validator  # noqa
from tests.fixtures.trees import (  # noqa
    finite_path_factory,
    path_factory,
    presentation_factory,
    presentation_file,
    tree_file,
)
