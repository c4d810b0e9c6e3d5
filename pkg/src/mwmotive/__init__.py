"""Motivic decompositions of real Grassmannians and flag varieties via Sq² on Schubert calculus."""

__version__ = "0.1.0"
