"""Shared instances used across test modules.

SPECTRAL_CORPUS entries are (omega, gamma, p) triples whose periodic
spectrum verdict is exactly true; NEGATIVE_CORPUS entries are triples
whose verdict is exactly false.
"""

from fractions import Fraction as F

import spectile as sp


def iu(*pairs):
    return sp.IntervalUnion.of(pairs)


UNIT = iu((0, 1))
OMEGA_2 = sp.build_omega(2, [[0, 1], [0, 3]], [0, F(1, 4), F(1, 2)])
OMEGA_SHIFT = iu((0, F(1, 2)), (F(3, 2), 2))
OMEGA_3 = sp.build_omega(3, [[0, 1, 2], [0, 1, 5]], [0, F(1, 6), F(1, 3)])
OMEGA_HALF = sp.build_omega(2, [[0, 2], [0, 6]], [0, F(1, 4), F(1, 2)])

SPECTRAL_CORPUS = [
    (UNIT, (0,), 1),
    (UNIT, (0, 1), 2),
    (OMEGA_2, (0, 1), 2),
    (OMEGA_SHIFT, (0, 1), 2),
    (OMEGA_3, (0, 1, 2), 3),
    (OMEGA_HALF, (0, F(1, 2)), 2),
]

NEGATIVE_CORPUS = [
    (UNIT, (0, F(1, 2)), 2),
    (iu((0, F(1, 2))), (0, 1), 2),
    (OMEGA_2, (0, F(1, 2)), 2),
]
