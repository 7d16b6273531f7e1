"""Entanglement of multipartite pure states from coefficient-matrix spectra.

The central quantity is MAPE, the l1 norm of the averaged partial entropies
``S_1, ..., S_{n//2}``, where ``S_l`` is the geometric mean of the bipartite
von Neumann entropies over all size-``l`` party subsets.  Each entropy is read
off the nonzero singular values of a coefficient matrix (a reshape of the
amplitude vector), ``E = -sum lambda^2 log2 lambda^2``.

>>> import mapent
>>> round(mapent.mape(mapent.ghz(5, 3)).m, 6)
3.169925
"""

__version__ = "0.1.0"

from ._config import Settings, get_settings, override, set_settings
from .coeff import CoefficientMatrix, bipartitions, coefficient_matrix, rank
from .errors import *  # noqa: F401,F403
from .gallery import (
    basis_state,
    d3,
    dicke,
    ghz,
    product_state,
    random_single,
    random_state,
    schmidt_state,
    symmetric_state,
)
from .locc import (
    LocalInstrument,
    apply_instrument,
    fuzz_monotonicity,
    identity_instrument,
    monotonicity_report,
    projective_instrument,
    random_instrument,
)
from .measures import (
    EntanglementVerdict,
    MapeValue,
    MemsVector,
    ape,
    is_genuinely_entangled,
    l2_ape,
    level_ranks,
    mape,
    mems,
)
from .spectra import (
    ReducedDensityMatrix,
    SpectrumResult,
    bipartite_entropy,
    entropy_from_eigenvalues,
    entropy_from_spectrum,
    hermitian_eigenvalues,
    reduced_density_matrix,
    singular_values,
    spectrum,
)
from .state import (
    Bipartition,
    DimsProfile,
    PureState,
    index_decode,
    index_encode,
    make_state,
    permute_parties,
    read_state,
    tensor_product,
    write_state,
)
