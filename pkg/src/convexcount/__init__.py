"""Exact counting of convex polyominoes and verification of the binomial and
generating-function identities behind the count."""
from .counting import count_perimeter, count_rect, quadruple_sum
from .errors import (
    ConvexCountError,
    DecompositionError,
    FeasibilityError,
    HypothesisError,
    PoleError,
)
from .exactnum import binomial, chu_vandermonde_check, pochhammer
from .lattice import (
    Polyomino,
    count_convex_bruteforce,
    count_path_pairs_bruteforce,
    count_path_pairs_lgv,
    decompose,
    enumerate_convex,
    recompose,
)
from .series import BivariateSeries

__version__ = "0.1.0"
