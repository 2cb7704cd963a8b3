"""Distance-regular and strongly regular graph toolkit: family generators,
Metsch clique geometries, spectra, parameter bounds and feasibility scans."""

__version__ = "0.1.0"

from .graph import (
    AmpleParams,
    Claw,
    Graph,
    IntersectionArray,
    ample_parameters,
    common_neighbors,
    find_claw,
    intersection_array,
    local_graph,
    regular_degree,
)
from .spectra import SrgParams, Spectrum, drg_eigenvalues, srg_spectrum, standard_sequence, sign_changes
from .families import FamilySpec, generate, parse_family, expected_parameters, complement
from .geometry import extract_geometry, metsch_t_min, metsch_t_corollary, special_clique_of_edge
