"""Inner rates of m-primary ideals on resolution dual graphs."""

from .dualgraph import (DecoratedTriple, DualGraph, Vertex, blowup_double, blowup_smooth,
                        canonical_key, intersection_matrix, k_vector, key_digest, to_dot,
                        triple_from_json, triple_to_json)
from .errors import *  # noqa: F401,F403
from .exactalg import IntMat, Rat, determinant, format_rat, is_negative_definite, solve_exact
from .ratecalc import (GraphPoint, RateProfile, eval_monomial_semivaluation, multiplicities_from_L,
                       polar_from_rates, rate_at, rates_from_triple, recurrence_extend,
                       skeletal_distance)
from .toric import (FanChain, MonomialIdeal, MonomialModule2, Ray, complete_system,
                    integral_closure, invariants_at_ray, is_precomplete, minimal_resolution_chain,
                    newton_polygon, omega2_module, resolve, triple_of_ideal)

__version__ = "0.1.0"
