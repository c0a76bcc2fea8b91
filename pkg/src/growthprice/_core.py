"""Kernel backend selection: compiled Cython core with Python fallback."""

try:
    from . import _core_cy as _impl
except ImportError:  # extension not built on this install
    from . import _core_py as _impl

BACKEND = _impl.BACKEND
EDGE_MARGIN = _impl.EDGE_MARGIN
log_growth = _impl.log_growth
admissible_fraction_sup = _impl.admissible_fraction_sup
sup_log_growth_scan = _impl.sup_log_growth_scan
