"""Linear Nakayama algebras, Dyck paths and 321-avoiding permutations.

The three families are in bijection: a Kupisch series determines a Dyck
path (the top boundary of the Auslander-Reiten quiver) and the
Billey-Jockusch-Stanley bijection sends the path to a 321-avoiding
permutation.  Under this correspondence the number of projectives of
injective dimension one equals the number of fixed points, and
``dim Ext^1(J, J)`` equals the support size of the permutation.
"""

from .bridge import algebra_for_permutation, dyck_to_kupisch, kupisch_to_dyck
from .census import CensusReport, enumerate_kupisch, run_census, syt_two_row
from .dyck import (
    DyckPath,
    ascent_descent,
    catalan,
    enumerate_dyck,
    parse_path,
    partial_code,
    peaks_and_levels,
    valley_levels,
)
from .errors import NakayamaError
from .nakayama import (
    KupischSeries,
    Module,
    count_inj_proj_dim_one,
    count_proj_inj_dim_one,
    ext1_JJ_dim,
    global_dimension,
    injective_dims,
    parse_kupisch,
    radical_id_le_one_count,
    validate_kupisch,
)
from .perm import (
    Permutation,
    bjs,
    bjs_inverse,
    block_number,
    connectivity_set,
    fixed_points,
    is_321_avoiding,
    parse_permutation,
    support_size,
)

__version__ = "0.1.0"
