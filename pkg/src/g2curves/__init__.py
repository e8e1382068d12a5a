"""Exact-arithmetic toolkit for involution fixed curves on Fano fourfold models.

Core subpackages: exactnum (Q(i) field and linear algebra), binforms (binary
forms), p1bundles (splitting types of kernel bundles on P^1), ratcurves
(parametrized rational curves, normal bundles, secant tests, joins), g2lie
(Chevalley model of the G2 Lie algebra and its central involution), models
(self-contained classical side computations).  The FastAPI app in
g2curves.service exposes every operation over HTTP; g2curves.cli is a thin
client for it.
"""

__version__ = "0.1.0"
