"""Scattering diagrams, broken lines and Landau-Ginzburg mirror potentials for log Calabi-Yau surfaces."""

from .broken import Potential, blowdown_filter, enumerate_broken_lines, potential, theta_lines, transport
from .cluster import FixedData, Seed, cluster_initial_diagram, kernel_quotient, mutate_seed
from .errors import *  # noqa: F401,F403
from .lattice import BlowupPoint, Fan, LatticeVector, ToricModel
from .scattering import PathAutomorphism, ScatteringDiagram, Wall, complete, gps_initial_diagram, log_jacobian, loop_product
from .series import SeriesContext, TruncatedSeries
from .svg import render_svg
from .tropical import bulk_potential_via_chain, semifano_toric_potential

__version__ = "0.1.0"

__all__ = [
    "Potential", "blowdown_filter", "enumerate_broken_lines", "potential", "theta_lines", "transport",
    "FixedData", "Seed", "cluster_initial_diagram", "kernel_quotient", "mutate_seed",
    "BlowupPoint", "Fan", "LatticeVector", "ToricModel",
    "PathAutomorphism", "ScatteringDiagram", "Wall", "complete", "gps_initial_diagram", "log_jacobian", "loop_product",
    "SeriesContext", "TruncatedSeries", "render_svg", "bulk_potential_via_chain", "semifano_toric_potential",
]
