"""Exact computations for parabolic equivariant commutative algebra and FI(n)-modules."""

from .categories import FB, FBT, FI, CategoryFlavor, WeightedInjection, compose, hom_count, iter_homs
from .hilbert import EGFSeries, KClass, exp_T, hseries_of_class, hseries_of_symelt, kclass_scale
from .ideals import PIdeal, canonicalize, contains, ideal_sum, is_prime, prime_chain, radical
from .partitions import Partition, PartitionTuple, lr_coefficient, mn_character
from .symfunc import TensorSymElt, multiply

__version__ = "0.1.0"

__all__ = [
    "FB",
    "FBT",
    "FI",
    "CategoryFlavor",
    "EGFSeries",
    "KClass",
    "PIdeal",
    "Partition",
    "PartitionTuple",
    "TensorSymElt",
    "WeightedInjection",
    "canonicalize",
    "compose",
    "contains",
    "exp_T",
    "hom_count",
    "hseries_of_class",
    "hseries_of_symelt",
    "ideal_sum",
    "is_prime",
    "iter_homs",
    "kclass_scale",
    "lr_coefficient",
    "mn_character",
    "multiply",
    "prime_chain",
    "radical",
]
