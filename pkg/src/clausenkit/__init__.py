"""Clausen-function numerics: special functions, harmonic sums, the
tetrahedral constant C(1,1) by four routes, and a seeded identity suite."""

from .ctet import Route, ctet_clausen, ctet_rajantie, ctet_routes, ctet_series, ctet_srp, pairwise_deltas
from .identities import Identity, Policy, Report, catalog, render_report, run_identity, run_suite
from .numkit import DD, Accumulator, DomainError, ExtReal
from .quad import QuadResult, gauss_kronrod, quad, tanh_sinh
from .specfun import chi2, cl2, lerch_phi, li2, lobachevsky, lsn, pfq_series, polygamma, ti2

__all__ = [
    "DD", "Accumulator", "DomainError", "ExtReal", "Identity", "Policy", "QuadResult", "Report", "Route",
    "catalog", "chi2", "cl2", "ctet_clausen", "ctet_rajantie", "ctet_routes", "ctet_series", "ctet_srp",
    "gauss_kronrod", "lerch_phi", "li2", "lobachevsky", "lsn", "pairwise_deltas", "pfq_series", "polygamma",
    "quad", "render_report", "run_identity", "run_suite", "tanh_sinh", "ti2",
]
__version__ = "0.1.0"
