"""Exact finite-N spectral correlation functions for rotation invariant
unitary matrix ensembles, with Grassmann-algebra and Monte Carlo checks."""

__version__ = "0.1.0"

CONVENTIONS = "gauss-weight=exp(-tr H^2); increment x_p - i*L_p*eps; metric block order (L_1..L_k,1..1)"
