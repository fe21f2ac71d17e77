"""leraytop: exact-arithmetic simplicial topology at desk scale.

Simplicial complexes, rational homology, Leray numbers, partitioned
complexes and their projections, multiple-point complexes with their
symmetric-group action, and Helly-number verification for box families.
"""

from .core import (ComplexError, GuardExceeded, OrderComplex,
                   SimplicialComplex, boundary_complex, clique_complex,
                   empty_complex, induced, intersection, is_chordal,
                   is_isomorphism, join, link, make_complex, solid_simplex,
                   subdivision, union, upper_interval, void_complex)
from .homology import (BettiVector, ChainBoundary, boundary_matrices,
                       euler_characteristic, reduced_betti, unreduced_betti)
from .leray import (LerayCertificate, check_chordal_characterization,
                    leray_by_definition, leray_by_links, leray_number)
from .multiproj import (MultiPointComplex, PartitionedComplex,
                        check_intersection_bound, check_mps_vanishing,
                        check_projection_theorem, extremal_example,
                        fiber_bound, generalized_mpc, make_partitioned,
                        multiple_point_complex, project,
                        random_partitioned_complex, tilde_closure)
from .icss import (AltChainComplex, E1Page, alt_betti, alt_chain_complex,
                   check_alt_chain_iso, check_euler, check_proof_vanishing,
                   double_point_closure, e1_page, sym_action)
from .helly import (AtomFamily, Box, BoxFamily, FrFamily, HellyReport,
                    UnionFamily, check_amenta, check_hl, helly_number,
                    helly_number_direct, make_box, make_fr_family, nerve,
                    pieces_projection, random_fr_family)

__version__ = "0.1.0"
