"""
Configuration settings for the Circle Shortcut Diameter toolkit.
"""

import math

# ─── Numerical Tolerances ───────────────────────────────────────────
ANGLE_WRAP_TOL = 1e-12      # angles this close to 2π normalize to 0
BISECTION_XTOL = 1e-12      # inverse_detour bracket width
SOLVER_XTOL = 1e-15         # characteristic constants (a*_k, σ_k, λ_k, eight root)
SOLVER_MAXITER = 200
NODE_MERGE_TOL = 1e-11      # endpoints closer than this share a graph node
PATH_TIE_TOL = 1e-12        # equal-length shortest paths
COVER_GUARD = 1e-12         # closed-rectangle guard in the cover checker
WITNESS_EPS = 1e-9          # interior margin for umbra / deep-umbra rules

# ─── Diameter Certification ─────────────────────────────────────────
DEFAULT_STEP = 1e-3
GRID_BLOCK_SIZE = 256       # candidate rows per evaluation block
N_JOBS = 1                  # joblib workers for grid blocks (threads)
MAX_BOUNDARY_CANDIDATES = 64  # umbra boundaries join the mesh up to this many shortcuts
MIN_DIAMETER = 2.0          # every configuration has diameter at least 2

# ─── Synthesis ──────────────────────────────────────────────────────
EIGHT_DSTAR_BRACKET = (math.pi / 2 - 1, 0.6)
EIGHT_PHASE_SAMPLES = 64    # fallback placement attempts
ASYMPTOTIC_MIN_M = 4
GROWTH_SAMPLE_M = (4, 9, 16, 25)

# ─── Verification ───────────────────────────────────────────────────
APPENDIX_TOL = 5e-4         # four-decimal appendix values
PRECISE_TOL = 5e-5          # ten-digit eight-shortcut constants
APPENDIX_LINE_COUNT = 58
AREA_GRID_POINTS = 10000
MONOTONE_GRID_POINTS = 1000
AREA_SAMPLE_DSTARS = (0.1, 0.3, 0.5, 0.7)
PERTURBATION_K = (2, 3, 4, 5)
PERTURBATION_TRIALS = 100
PERTURBATION_MAGNITUDE = 0.05  # max rotation and length change per shortcut
PERTURBATION_STEP = 5e-3    # certifier step for perturbed configurations
PERTURBATION_SLACK = 1e-6

# ─── Documents & Output ─────────────────────────────────────────────
DOCUMENT_VERSION = 1
NUMBER_FORMAT = '.10g'      # 10 significant digits on every printed number

# ─── Rendering ──────────────────────────────────────────────────────
CIRCLE_CANVAS = (800, 800)
STRIP_CANVAS = (1200, 300)
CANVAS_MARGIN = 40
SVG_HASH_SALT = 'circle-shortcuts'
PALETTE = [
    '#1f77b4', '#ff7f0e', '#2ca02c', '#d62728', '#9467bd',
    '#8c564b', '#e377c2', '#7f7f7f', '#bcbd22', '#17becf',
]
GAP_COLOR = '#ff0000'
