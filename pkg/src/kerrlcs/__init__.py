"""Numerical verification of the locally conformally symplectic
correspondence between the Kerr exterior and the unitary group U(2).

Layers:
- ad: forward-mode automatic differentiation (nestable, up to 4 variables)
- forms: pointwise exterior calculus on coordinate charts
- kerr: Kerr-Schild charts, metric, null field and the lcs pair (omega, lee)
- unitary: Euler charts on SU(2)/U(2), Maurer-Cartan frame, Cayley transform
- bridge: the linear substitution identifying the two sides, torus covers
- harness: deterministic residual checks and report serialization
- cli: `kerrlcs` command-line entry point
"""

from .ad import (CScalar, Scalar, gradient, hessian, lift_vars, make_vars,
                 partials_of, value_of)
from .bridge import (COVER_2, COVER_DIAG2, COVER_IDENTITY, CoverMap,
                     ReparamMatrix, deck_difference, substitution_map,
                     torus_cover_preimages, verify_lambda_identity,
                     verify_omega_identity)
from .errors import (AtInfinityError, ChartError, ConfigurationError,
                     DegreeError, DomainError, KerrlcsError,
                     LeeSingularityError, NotATorusMapError,
                     SingularLocusError, SingularMetricError)
from .forms import (Chart, ChartMap, FormField, MetricField, ext_d, hodge_star,
                    minkowski_metric, pullback, pullback_metric, volume_form,
                    wedge)
from .harness import (CheckReport, SuiteConfig, eval_quantity, report_csv,
                      report_json, run_suite, suite_passed)
from .kerr import (CARTESIAN, KS, KSU, CartesianEvent, KSPoint, KerrParams,
                   cartesian_to_ks, derived_scalars, kerr_metric, ks_to_cartesian,
                   lambda_form, lee_form, omega_kerr, ricci_residual)
from .unitary import (Quaternion, cayley, cayley_inv, euler_to_su2,
                      mc_frame_closed_form, mc_frame_from_group, omega_u2,
                      su2_to_euler)

__version__ = "1.0.0"
