from tangentpsc.curvature.formula import (AuxiliaryFunctions, FTerms, GrowthComparison, ScalarProfile,
                                          auxiliary_functions, f_terms, growth_comparison, oracle_residual,
                                          scalar_profile)
from tangentpsc.curvature.positivity import (PositivityCertificate, Verdict, certify_uniform_positivity,
                                             level_exceedance, verify_certificate)
from tangentpsc.curvature.displays import DisplayCheck, check_worked_displays, displays_consistent
