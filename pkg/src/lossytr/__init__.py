"""Time-reversal source localization in lossless and Debye-lossy 2D TE media.

Submodules:
    medium       -- Debye material parameters and complex dispersion relations
    hankel       -- Hankel functions H0^(1), H1^(1) for complex arguments
    greens       -- 2D scalar/dyadic electric-electric Green functions
    forward      -- pseudospectral TE Maxwell solver with PML, boundary data
    attenuation  -- attenuation operator calculus (L_a, L*_{-a,rho}, P_rho, inverse filter)
    reconstruct  -- the three time-reversal imaging functionals and metrics
    io           -- binary/CSV/PNG artifact formats
    config, cli  -- experiment configs and the lossy-tr command line
"""

__version__ = "0.1.0"

_SUBMODULES = (
    "medium",
    "hankel",
    "greens",
    "forward",
    "attenuation",
    "reconstruct",
    "io",
    "config",
    "cli",
)


def __getattr__(name):
    # Lazy imports keep `import lossytr` cheap and let the CLI pin thread
    # environment variables before numpy loads.
    if name in _SUBMODULES:
        import importlib

        module = importlib.import_module(f".{name}", __name__)
        globals()[name] = module
        return module
    raise AttributeError(f"module {__name__!r} has no attribute {name!r}")
