"""Twin-width toolkit: trigraph contraction, graph products, constructive
contraction sequences, closed-form bounds and an exact solver."""
from .errors import (DimensionError, FormatError, InvalidContractionError, InvalidSequenceError,
                     NotIsomorphicError, ParameterError, RegularityError, RetryExhaustedError,
                     TwinWidthError)
from .graph import (BLACK, RED, ContractionSequence, Graph, Trigraph, apply_sequence, contract,
                    induced_subtrigraph, max_red_degree, replay, sequence_width)
from .bounds import UNBOUNDED, lower_bound_symdiff, product_upper_formula
from .solver import SearchBudget, SolveResult, greedy_upper, tww_exact, tww_le

__version__ = "0.1.0"
