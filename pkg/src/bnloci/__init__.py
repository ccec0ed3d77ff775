"""Certifying calculator for Brill-Noether loci via curves on K3 surfaces of Picard rank two."""
from .bn_core import (
    BNTriple,
    d_max,
    discriminant,
    expected_maximal_loci,
    is_expected_maximal,
    max_rank,
    rho,
    rho_pflueger,
    serre_dual,
)
from .certifier import (
    certify_no_grd,
    exceptional_tuples,
    grd_general_certificate,
    grd_general_targets,
    known_unexpected_containments,
)
from .picard_lattice import PicardLatticeParams, check_rigidity, decomposition_candidates
from .regeneration import find_witness, nc30_holds, special_grd_exists

__version__ = "0.1.0"
