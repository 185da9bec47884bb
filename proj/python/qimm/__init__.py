"""Exact q-immanant verification for U_q(gl_n).

Scalars are returned as fractions.Fraction; inputs accept Fraction, int or "p/r" strings.
"""

import json as _json

from ._qimm import (  # noqa: F401
    ConfigError,
    ScaleExceeded,
    eigenvalue_oracle,
    factorial_schur,
    immanant_eigenvalue,
    immanant_poly,
    partitions,
    primitive_idempotent,
    qimmanant,
    rcheck,
    ssyt_count,
    standard_tableaux,
    verify_capelli,
    verify_newton,
    verify_rmatrix,
    verify_rtt,
)
from ._qimm import run_report as _run_report


def verify(**config):
    """Run verification suites; keys mirror the CLI flags (m_max -> "m-max")."""
    cfg = {key.replace("_", "-"): value for key, value in config.items()}
    return _json.loads(_run_report(_json.dumps(cfg)))
