"""Root-system toolkit: Coxeter diagrams, root enumeration, the
H4-inside-E8 folding, Coxeter-plane projections onto Gosset circles, and
the affine Toda mass spectrum, cross-validated against each other."""

from .coxplane import (
    CoxeterPlane,
    Orbit,
    build_coxeter_plane,
    dihedral_generators,
    orbit_decomposition,
    perron_eigenvector,
    rotation_order,
)
from .diagrams import CoxeterDiagram, GramMatrix, bipartition, build_diagram, gram_matrix, is_finite_type
from .errors import ConvergenceError, DiagramSpecError, FiniteTypeError, GossetError
from .folding import Folding, block_diagonalize, fold_e8_to_h4, folded_generators
from .golden import SIGMA, SQRT5, TAU, Approx, GoldenNumber
from .masses import (
    MassSpectrum,
    RatioReport,
    TodaMassMatrix,
    jacobi_eigenvalues,
    ratio_report,
    toda_mass_matrix,
    toda_masses,
    zamolodchikov_spectrum,
)
from .project import (
    Circle,
    CircleSpectrum,
    PlanarPoint,
    circle_spectrum,
    fundamental_weights,
    ortho_basis,
    project_many,
    project_orthogonal,
    project_skew,
)
from .render import render_spectrum
from .roots import RootSystem, enumerate_roots, highest_root, realize_simple_roots, reflect, root_system

__version__ = "0.1.0"

__all__ = [
    "Approx",
    "Circle",
    "CircleSpectrum",
    "ConvergenceError",
    "CoxeterDiagram",
    "CoxeterPlane",
    "DiagramSpecError",
    "FiniteTypeError",
    "Folding",
    "GoldenNumber",
    "GossetError",
    "GramMatrix",
    "MassSpectrum",
    "Orbit",
    "PlanarPoint",
    "RatioReport",
    "RootSystem",
    "SIGMA",
    "SQRT5",
    "TAU",
    "TodaMassMatrix",
    "bipartition",
    "block_diagonalize",
    "build_coxeter_plane",
    "build_diagram",
    "circle_spectrum",
    "dihedral_generators",
    "enumerate_roots",
    "fold_e8_to_h4",
    "folded_generators",
    "fundamental_weights",
    "gram_matrix",
    "highest_root",
    "is_finite_type",
    "jacobi_eigenvalues",
    "orbit_decomposition",
    "ortho_basis",
    "perron_eigenvector",
    "project_many",
    "project_orthogonal",
    "project_skew",
    "ratio_report",
    "realize_simple_roots",
    "reflect",
    "render_spectrum",
    "root_system",
    "rotation_order",
    "toda_mass_matrix",
    "toda_masses",
    "zamolodchikov_spectrum",
    "__version__",
]
