"""Case handlers; importing the package registers all of them."""

from . import case1, case2, case3, case4, cover_cases  # noqa: F401
from .case1 import linear_target
from .common import finish_by_gvs, flip_to_affine, from_triple

__all__ = ["finish_by_gvs", "flip_to_affine", "from_triple", "linear_target"]
