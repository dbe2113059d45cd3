"""pairmatch: choosing the best m matched pairs from N candidate clusters.

Public surface re-exported here: Mahalanobis distance construction, the
exact matching solver, the four pair-selection methods, and the Monte Carlo
scenario lab.
"""

from .matcher import (BACKEND, Matching, enumerate_matchings_oracle,
                      min_weight_perfect_matching)

__all__ = [
    "BACKEND",
    "Matching",
    "enumerate_matchings_oracle",
    "min_weight_perfect_matching",
]

__version__ = "0.1.0"
