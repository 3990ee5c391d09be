"""Linear surface waves over a vortex: analytical solution of
u(x) + F^2 H u'(x) = 1/(pi (x^2 + 1)) and its numerical verification."""

from ._core import (
    AccuracyError,
    FroudeContext,
    TailModel,
    aux_fg,
    catalog_transform,
    catalog_value,
    ci,
    convolution_identity_residual,
    ei,
    ei_scaled,
    full_report,
    hilbert_numeric,
    ide_residual,
    ode_residual,
    report_text,
    si,
    si_small,
    surface_profile,
    u_asymptotic,
    u_closed_form,
    u_origin,
    u_quadrature,
    u_vp_oracle,
    __version__,
)

__all__ = [
    "AccuracyError",
    "FroudeContext",
    "TailModel",
    "aux_fg",
    "catalog_transform",
    "catalog_value",
    "ci",
    "convolution_identity_residual",
    "ei",
    "ei_scaled",
    "full_report",
    "hilbert_numeric",
    "ide_residual",
    "ode_residual",
    "report_text",
    "si",
    "si_small",
    "surface_profile",
    "u_asymptotic",
    "u_closed_form",
    "u_origin",
    "u_quadrature",
    "u_vp_oracle",
    "__version__",
]
