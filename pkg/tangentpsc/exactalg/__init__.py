from tangentpsc.exactalg.polynomial import ONE, T, ZERO, Polynomial, Rational, Scalar
from tangentpsc.exactalg.ratfun import (NEG_INF, POS_INF, ExtendedValue, PoleError, RationalFunction, derivative,
                                        evaluate, format_extended, limit_at_infinity)
from tangentpsc.exactalg.roots import (HALF_LINE, Domain, IsolatingInterval, count_real_roots, isolate_real_roots,
                                       refine_root, sturm_sequence)
from tangentpsc.exactalg.signs import SignEvidence, certify_sign
from tangentpsc.exactalg.minimize import DEFAULT_PRECISION, HalfLineMinimum, minimize_on_halfline
