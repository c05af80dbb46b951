"""Plasmon-supported parametric down-conversion: thin-film optics, SPP
dispersion, phase matching, pair yield and the emitted polarization state."""

from ._core import (  # noqa: F401
    __version__,
    Polarization,
    Regime,
    SppMode,
    StackResponse,
    chsh_optimum,
    chsh_value,
    classify_regime,
    coherence_length_damping,
    coherence_length_mismatch,
    coincidence_probability,
    degenerate_match,
    design_grating_period,
    effective_chi2,
    emitted_state,
    enhancement_spectrum,
    evaluate,
    fold_wavevector,
    is_separable,
    kretschmann_angle,
    kretschmann_stack,
    nondegenerate_match,
    optimize_thickness,
    resonance_angle,
    signal_radiance,
    silver_permittivity,
    spp_mode,
    stack_response,
    transformation_coefficient,
    yield_kappa,
)
