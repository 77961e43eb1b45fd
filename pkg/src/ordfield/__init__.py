"""Exact ordered fields (Q, rational functions, Laurent series) and completeness probes."""

__version__ = "0.1.0"

from .errors import (DivisionByZero, ExprSyntaxError, HeuristicInconclusive, NotAGap,
                     NotNested, NotSummable, OrdFieldError, PrecisionExhausted,
                     StabilizationViolated, StabilizedSequence, SymbolNotInField,
                     TagMismatch, UnsupportedField)
from .fields import (FieldHandle, Interval, LaurentField, RationalField, RationalFunctionField,
                     axiom_suite, embed_rational, embed_ratfun_in_laurent, get_field,
                     sample_element)
from .kernel import Ordering, Sign
from .laurent import LaurentSeries, SeriesSequence
from .polynomial import Polynomial
from .ratfun import AT_INFINITY, NEAR_ZERO, Classification, OrderTag, RationalFunction
from .results import ProbeResult, Status, Witness, WitnessKind
