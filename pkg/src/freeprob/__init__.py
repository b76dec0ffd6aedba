"""freeprob: exact free-probability combinatorics and the analytic machinery
of the Askey-Wimp-Kerov measures.

Modules: partitions (set partitions, crossings, Moebius functions),
cumulants (classical/free/boolean conversions, Gaussian specialisations),
trees (binary trees, Dyck words, the mu operator), chains (move-to-root and
Naimi-Trehel Markov chains), hopf (the ordered-tree Hopf algebra and the
charge coproduct), transforms (Jacobi data, Hankel positivity / free
infinite divisibility, Cauchy-transform evaluators), cli (command line).
"""

__version__ = "0.1.0"

from . import chains, cumulants, hopf, partitions, transforms, trees

__all__ = ["chains", "cumulants", "hopf", "partitions", "transforms", "trees", "__version__"]
