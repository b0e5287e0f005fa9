"""Exact computations with decomposable ternary cubics.

Submodules:

    linalg      exact kernels over Q and prime fields
    characters  SL3 weight/character calculus and plethysm
    poly        sparse exact polynomials over the named variable families
    tableaux    semistandard tableau bases and harmonic projection
    brackets    the classical symbolic method and the concomitant catalog
    loci        the six decomposability loci and their parameterizations
    ideals      graded pieces of the defining ideals, kernels and characters
    resolution  published Betti tables, module ledgers, consistency checks
    cli         command-line interface
"""

__version__ = "0.1.0"
