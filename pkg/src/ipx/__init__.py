"""Verification toolkit for Cauchy-Schwarz, Buzano and Richard type inequalities.

Modules:

* :mod:`ipx.scalars`: exact Gaussian-rational scalars and the tolerance policy
* :mod:`ipx.linalg`: vectors, inner products, Gram matrices, constrained sampling
* :mod:`ipx.operators`: rank-one and Selberg operators, spectral norms
* :mod:`ipx.identities`: exact instance-wise identity checks
* :mod:`ipx.catalog`: the inequality registry, evaluation and fuzzing
* :mod:`ipx.search`: tightness search and equality certificates
* :mod:`ipx.cli`: the ``ipx`` command
"""

__version__ = "0.1.0"

from .errors import (  # noqa: E402
    BackendError,
    ConstraintError,
    DimensionError,
    InfeasibleConstraints,
    NonFiniteComparison,
)
from .scalars import (  # noqa: E402
    DEFAULT_POLICY,
    GaussianRational,
    TolerancePolicy,
    approx_eq,
    approx_le,
    exact_eq,
    gr,
)
from .linalg import gram, inner, norm, norm_sq, project_out, sample, vec  # noqa: E402
from .operators import (  # noqa: E402
    StructuredOperator,
    combine,
    compose,
    identity,
    is_positive,
    rank_one,
    selberg,
    spectral_norm,
    spectral_norm_dense,
)
from .identities import check_identity  # noqa: E402
from .catalog import evaluate, fuzz, list_entries  # noqa: E402
from .search import certify_equality, tightness_search  # noqa: E402
