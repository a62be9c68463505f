"""I-norm, left regular representation and l^p operator norm bounds."""

from .regular import RegularRepMatrix, regular_rep, i_norm
from .estimation import NormEstimate, p_norm, parse_p, upper_bound, vector_norm
from .isometry import certify_invertible_isometry

__all__ = [
    "RegularRepMatrix",
    "regular_rep",
    "i_norm",
    "NormEstimate",
    "p_norm",
    "parse_p",
    "upper_bound",
    "vector_norm",
    "certify_invertible_isometry",
]
