"""Quadratic Hermite-Pade approximants to the exponential function and their asymptotics."""

__version__ = "0.1.0"
