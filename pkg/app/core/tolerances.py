"""Numerical contract of the toolkit.

These constants decide what a "pass" means; they are deliberately not part
of the runtime configuration.
"""

# t-conorms
ASSOCIATIVITY_ATOL: float = 1e-12

# anti-norm axiom checks
AXIOM_ATOL: float = 1e-12
VANISHING_PROBES: tuple[float, ...] = (2.0**10, 2.0**20, 2.0**30)
VANISHING_ATOL: float = 1e-6
SUPREMUM_PROBES: tuple[float, ...] = (2.0**-10, 2.0**-20, 2.0**-30)
SUPREMUM_ATOL: float = 1e-3
TABULATION_ATOL: float = 1e-6
# merged grid for combine_max: 2^-30 .. 2^40, 32 knots per octave
COMBINE_GRID_OCTAVES: tuple[int, int] = (-30, 40)
COMBINE_GRID_PER_OCTAVE: int = 32

# bisection (generalized inverses)
BISECTION_RTOL: float = 1e-10
BISECTION_ATOL: float = 1e-10
BISECTION_MAX_ITER: int = 200
EXPANSION_LIMIT: float = 2.0**1000

# α-cut duality
LEMMA_ATOL: float = 1e-8
ROUND_TRIP_ATOL: float = 1e-6
CLOSED_FORM_RTOL: float = 1e-9
TRIANGLE_SLACK: float = 1e-9
HOMOGENEITY_RTOL: float = 1e-12
BOUNDARY_BAND: float = 1e-8
RADIUS_ATOL: float = 1e-6
CONTINUITY_ATOL: float = 1e-6
# the last step of a continuity schedule must shrink the error to at most
# SLACK·(n_prev / n_max)^k of its previous value, and never above CAP
CONTINUITY_DECAY_SLACK: float = 3.0
CONTINUITY_DECAY_CAP: float = 0.9
RADIUS_DIRECTIONS: int = 256

# sequences
CONVERGENCE_MARGIN: float = 1e-9
ALPHA_NORM_ZERO_TOL: float = 1e-6
UNIQUENESS_ATOL: float = 1e-8
WINDOW_SEARCH_LIMIT: int = 2**52

# Riesz construction
RANK_TOL: float = 1e-10
MINIMIZER_FTOL: float = 1e-10
MINIMIZER_MAX_ITER: int = 10_000
OBJECTIVE_ATOL: float = 1e-8
WITNESS_NORM_ATOL: float = 1e-8
WITNESS_DISTANCE_SLACK: float = 1e-6
WITNESS_MEMBERSHIP_ATOL: float = 1e-8
SUBSPACE_SAMPLE_RADIUS: float = 10.0
CLOSEDNESS_RESOLUTION: float = 1e-4
EPSILON_TARGET_FACTOR: float = 0.5
