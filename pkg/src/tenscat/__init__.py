"""Label calculator for the tensor category of topological gl(V)-modules."""

__version__ = "0.1.0"

from .category import (
    TRIVIAL,
    LabelMultiset,
    SimpleLabel,
    dual_label,
    ext_dim,
    jh_mixed_tensor,
    jh_projective,
    radical_layers,
    tensor_projectives,
)
from .errors import (
    DomainError,
    InternalConsistencyError,
    ParseError,
    ResourceBoundError,
    TenscatError,
)
from .homdiag import (
    ContractionDiagram,
    TensorMonomial,
    TensorShape,
    compose,
    enumerate_basis,
    evaluate,
    hom_dim,
    identity,
)
from .lrcalc import LRCache, lr_coeff, lr_expand_pair
from .weightcalc import Weight, enumerate_weights, weight_multiplicity, weight_support_check
from .young import (
    EMPTY,
    MonomialPoly,
    YoungDiagram,
    conjugate,
    contains,
    partitions_of,
    schur_in_vars,
    schur_product_expand,
    size,
    syt_count,
)
