"""Exact arithmetic and table verification for polarized manifolds of sectional genus three.

Submodules:

* ``chowcurve`` - integer Chow-ring arithmetic on projectivized bundles
  over a smooth curve, plus h^0 counts and obstruction numbers for split
  bundles over the projective line;
* ``surflat`` - intersection lattices for the polarized surfaces that
  occur as scroll bases, with blow-up / weight-sequence arithmetic;
* ``classify`` - the classification engines: structural branch map,
  splitting-type enumeration with pruning rules, Veronese parameter
  solver, reduction and Delta-genus bookkeeping;
* ``tablecli`` - table fixtures, verification reports, the brute-force
  ring oracle self-test, and the command-line interface.
"""

from . import chowcurve, classify, surflat, tablecli

__all__ = ["chowcurve", "classify", "surflat", "tablecli"]
__version__ = "0.1.0"
