"""Exact monomial-ideal toolkit: intersections of prime powers, polymatroidal
and Borel ideals, edge ideals, Newton polyhedra and symbolic powers."""

from .core import (
    MonomialIdeal,
    PrimeIdeal,
    add,
    colon,
    contains,
    embed,
    format_ideal,
    intersect,
    intersect_all,
    is_subideal,
    localize,
    minimal_generators,
    multiply,
    power,
    prime_power,
    saturate,
    truncate,
)
from .decomp import (
    PrimePowerDecomposition,
    canonical_decomposition,
    is_intersection_type,
    is_strong_intersection_type,
    remove_redundant,
)
from .errors import (
    ConsistencyError,
    DimensionError,
    MidealError,
    ParseError,
    PreconditionError,
    SizeGuardError,
)
from .parsing import parse_ideal, print_ideal
from .resolution import betti, has_linear_resolution, regularity
from .spectrum import associated_primes, minimal_primes, socle

__version__ = "0.1.0"
