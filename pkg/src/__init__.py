"""coxeterfold - exact affine Coxeter complexes, folded galleries and moment graphs

Library and command-line tool for alcove galleries, positive foldings with
respect to Weyl chamber orientations, and Bruhat moment graphs.
"""

__version__ = "1.0.0"
__author__ = "coxeterfold Team"
