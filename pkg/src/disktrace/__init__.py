"""Numerical toolkit for the wave trace of the unit disk near its first
cluster point: Hankel phases, real-index Bessel zeros, Debye contours,
the length spectrum and Poisson terms of the mollified trace."""

from .bessel_zeros import (GradPair, ZeroPoint, alpha_of, asymptotic_grad,
                           disk_zeros, rho, rho_grad, rho_many, symbol_check,
                           zero_point)
from .bounds import BoundReport
from .debye_contours import (AmplitudePair, ContourSample, amplitude_a,
                             amplitude_b, amplitude_pair, bound_report,
                             contour_sample, solve_Z, solve_zeta)
from .errors import BudgetError, ConvergenceError, DomainError, GridError
from .length_spectrum import LengthEntry, critical_point, enumerate_lengths, length
from .special_functions import (AiryValue, HankelValue, PhasePoint, airy_A,
                                airy_B, hankel_eval, theta_phase,
                                theta_x_derivative)
from .wave_trace import (CutoffSpec, PoissonTerm, QuadSpec, SmoothnessReport,
                         TraceSample, cutoff_eval, decay_scan, poisson_table,
                         poisson_term, smoothness_probe, stationary_point,
                         trace_mollified)

__version__ = "0.1.0"
