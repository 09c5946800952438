"""Poncelet 3-periodic families with stationary Brocard points.

Three families (homothetic ellipse pair, Brocard porism, confocal lambda
family), triangle centers and Brocard geometry, invariant sweeps, the
similarity maps between the first two families, center loci, stationary
circles and a synthetic construction from two Brocard points and a vertex.
"""

from .centers import (
    CenterId,
    brocard_angle,
    brocard_circle,
    brocard_inellipse,
    brocard_points,
    circumradius,
    cot_omega,
    cot_omega_pair,
    steiner_circumellipse,
    triangle_center,
)
from .circles import NamedCircle, stationary_circles, verify_stationarity
from .errors import *  # noqa: F401,F403
from .families import (
    FamilyKind,
    FamilySpec,
    PorismParams,
    brocard_porism_params,
    brocard_triangle,
    brocard_triangle_closed_form,
    closed_form_discrepancy,
    confocal_lambda_params,
    confocal_lambda_triangle,
    homothetic_pair,
    homothetic_triangle,
    porism_feasible,
)
from .geometry import ConicImplicit, Ellipse, Line, Point, Similarity, Triangle, Trilinears
from .invariants import InvariantReport, aspect_ratio_sweep, family_reports, sweep, sweep_point
from .loci import fit_axis_aligned_ellipse, fit_circle, sample_locus
from .moses import MosesResult, moses_construct, moses_solutions
from .similarity import SimilarityFrame, brocard_to_homothetic, homothetic_to_brocard

__version__ = "0.1.0"
