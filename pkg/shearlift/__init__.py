#!/usr/bin/env python3
"""
@brief Harmonic shears and their minimal-graph lifts
@file __init__.py

This package contains the numerical components:
- analytic_families: conformal maps F_c, F_n and dilatations
- special_functions: Gauss 2F1 series and principal-branch helpers
- quadrature: vectorised adaptive path integrals
- shear_engine: numeric and closed-form harmonic shears
- partial_fractions: the I_eta / I_3m integral families
- we_lift: Weierstrass-Enneper third coordinate
- normalization: Moebius normalization pipelines and canonical surfaces
- geometry_verify: sampled verification checks and reports
- mesh: disk grids, surface meshes and export
- cli: command-line surface

@note This module follows Python 3.10+ standards and project guidelines
"""

__version__ = "1.0.0"

# Package imports for convenience - removed to prevent circular imports
# Import modules directly from their specific files instead
