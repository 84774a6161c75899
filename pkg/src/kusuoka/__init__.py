"""Law-invariant coherent risk measures on discrete distributions."""
from .distribution import DiscreteDistribution, StepQuantile, build, dirac, from_samples, quantile, tail_integral
from .dominance import downward_closure_member, fo_dominates, majorizes, prune_measures, prune_spectral
from .errors import KusuokaError
from .families import (
    HigherOrderParams,
    SemidevParams,
    absolute_semidev_kusuoka,
    higher_order_dual,
    higher_order_risk,
    higher_order_witness,
    semideviation_risk,
    semidev_spectral,
    semidev_witness,
)
from .kernels import BACKEND
from .regularity import AtomicSpace, nonregularity_condition
from .riskcore import KusuokaSet, avar, avar_variational, finite_max_risk, kusuoka_eval, mixture_avar, spectral_risk
from .transform import SpectralStep, UnitMeasure, coarsen, inflate_norm, q_norm, t_forward, t_inverse

__version__ = "0.1.0"
