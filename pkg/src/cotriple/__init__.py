"""Exact-arithmetic engine for cotorsion triples over finite-dimensional algebras."""

__version__ = "0.1.0"

from .algebra import Algebra, builtin_algebra, check_algebra
from .errors import CotripleError
from .modules import ModuleMap, ModuleRep, ShortExactSeq
from .registry import build_registry
from .triples import CotorsionTriple, gorenstein_triple, trivial_triple, user_triple

__all__ = [
    "Algebra",
    "CotorsionTriple",
    "CotripleError",
    "ModuleMap",
    "ModuleRep",
    "ShortExactSeq",
    "build_registry",
    "builtin_algebra",
    "check_algebra",
    "gorenstein_triple",
    "trivial_triple",
    "user_triple",
    "__version__",
]
