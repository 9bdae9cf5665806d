"""Exact braid representations, deformed Fock spectra and bracket tables."""

try:
    from ._braidlab import (
        SingularLevelError,
        braid_order,
        cross_angle,
        gl11_violations,
        heisenberg_closed,
        match_spectrum,
        meta_abelian_mixed,
        spectrum_at_level,
        spectrum_generic,
        yang_baxter_residual,
        yang_baxter_residual_generic,
        __version__,
    )
except ImportError:  # development layout: extension next to the package
    from _braidlab import (
        SingularLevelError,
        braid_order,
        cross_angle,
        gl11_violations,
        heisenberg_closed,
        match_spectrum,
        meta_abelian_mixed,
        spectrum_at_level,
        spectrum_generic,
        yang_baxter_residual,
        yang_baxter_residual_generic,
        __version__,
    )

__all__ = [
    "SingularLevelError",
    "braid_order",
    "cross_angle",
    "gl11_violations",
    "heisenberg_closed",
    "match_spectrum",
    "meta_abelian_mixed",
    "spectrum_at_level",
    "spectrum_generic",
    "yang_baxter_residual",
    "yang_baxter_residual_generic",
    "__version__",
]
