"""Sinc-kernel fractional derivative, its transform images and heat-diffusion models."""

from .errors import (ConfigError, DomainError, InversionError, NumericError,
                     SincFracError, SingularityError)
from .functions import CATALOGUE, FunctionSpec
from .heat import (BoundarySpec, Comparison, DiffusionProblem, SolutionGrid,
                   classical_closed_form, classical_laplace_solution, compare_models,
                   h_factor, solve, solve_classical, solve_spacefrac, solve_timefrac,
                   spacefrac_sumudu_solution, timefrac_laplace_solution)
from .inversion import InversionConfig, laplace_invert, stehfest_weights, sumudu_invert
from .kernel import (FracOrder, erfc_fn, mollifier_integral, nsinc, scaled_kernel,
                     sine_integral)
from .operator import (QuadratureConfig, frac_derivative, frac_derivative_higher,
                       limit_probe, linear_case_closed_form)
from .transforms import (FourierImage, LaplaceImage, SumuduImage, fourier_image_kernel,
                         fourier_image_operator, laplace_image_kernel, laplace_image_operator,
                         numerical_laplace, numerical_sumudu, sumudu_image_kernel,
                         sumudu_image_operator)

__version__ = "0.1.0"
