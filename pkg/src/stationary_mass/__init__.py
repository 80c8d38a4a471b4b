"""
stationary-mass - frequency-by-frequency estimation of stationary mass

Estimates the vector of count probabilities of a mixing sequence with the
WingIt, plug-in and hybrid estimators, and checks the estimators against
ground truth and concentration bounds by seeded simulation.
"""

__version__ = "0.1.0"
