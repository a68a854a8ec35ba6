from .tconorm import TConorm, TConormKind, UnitValue, unit_value
from .space import BaseNormKind, VectorSpace
from .profile import DecayProfile, ExponentialProfile, ReciprocalProfile, StepProfile, TabulatedProfile
from .antinorm import FuzzyAntiNorm
from .alpha_family import AlphaNormFamily, check_alpha
from .sequence import ExplicitSequence, GeneratorSequence, RateRule, VectorSequence
from .subspace import Subspace
