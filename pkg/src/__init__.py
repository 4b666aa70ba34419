# modsurf: modular curve, pants and flip graphs of surfaces
__version__ = "1.0.0"
