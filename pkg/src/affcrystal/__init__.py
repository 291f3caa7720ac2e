"""Affine perfect crystals, the path model and Demazure crystals."""
from .cartan import AffineFamily, dominant_weights_of_level, fundamental, level, sigma_apply
from .coordinate import CoordinateCrystal
from .crystal import (Crystal, TensorProduct, build_graph, closure, reduce_signature,
                      tensor_apply, tensor_signature)
from .demazure import (DemazureConfig, character, check_conditions, classical_invariance_check,
                       demazure_paths, extremal_chain, fclosure_subset, kappa2_search,
                       mixed_subset, recursive_oracle)
from .errors import (BudgetError, ConditionFailure, CrystalError, DimensionError,
                     MembershipError, UnsupportedWeightError)
from .paths import GroundState, Path, ground_state_path, path_apply, path_weight
from .perfect import perfectness_report
from .schedules import Schedule, builtin_schedule, load_schedule
from .tableau import TableauCrystal

__version__ = "0.1.0"
