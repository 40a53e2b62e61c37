"""Frozen reference expansions used across test modules.

Keys are (black, white) exponent pairs; values exact coefficients.  The
fractional hexangulation entries are Fractions so both rational backends
compare exactly.
"""

from fractions import Fraction as F

QUAD_B1 = {
    (1, 0): 1,
    (2, 0): 1, (1, 1): 1,
    (3, 0): 2, (2, 1): 5, (1, 2): 2,
    (4, 0): 5, (3, 1): 22, (2, 2): 22, (1, 3): 5,
}
QUAD_B2 = {
    (1, 0): 1,
    (2, 0): 1, (1, 1): 2,
    (3, 0): 2, (2, 1): 9, (1, 2): 6,
    (4, 0): 5, (3, 1): 37, (2, 2): 57, (1, 3): 20,
}
QUAD_B3 = {
    (1, 0): 1,
    (2, 0): 1, (1, 1): 2,
    (3, 0): 2, (2, 1): 10, (1, 2): 6,
    (4, 0): 5, (3, 1): 44, (2, 2): 65, (1, 3): 20,
}
QUAD_LADDER = {1: QUAD_B1, 2: QUAD_B2, 3: QUAD_B3}

HEX_B1 = {
    (1, 0): 1,
    (3, 0): 1, (2, 1): 3, (1, 2): 1,
    (5, 0): 3, (4, 1): 24, (3, 2): 46, (2, 3): 24, (1, 4): 3,
}
HEX_B2 = {
    (1, 0): 1,
    (3, 0): 1, (2, 1): 5, (1, 2): 3,
    (5, 0): 3, (4, 1): 36, (3, 2): 99, (2, 3): 77, (1, 4): 15,
}
HEX_B3 = {
    (1, 0): 1,
    (3, 0): 1, (2, 1): 6, (1, 2): 3,
    (5, 0): 3, (4, 1): 48, (3, 2): 132, (2, 3): 91, (1, 4): 15,
}
HEX_LADDER = {1: HEX_B1, 2: HEX_B2, 3: HEX_B3}

QUAD_G1 = {
    (2, 1): 1, (1, 2): 1,
    (3, 1): 2, (2, 2): 5, (1, 3): 2,
    (4, 1): 5, (3, 2): 22, (2, 3): 22, (1, 4): 5,
}
QUAD_G2 = {
    (2, 1): 1,
    (3, 1): 4, (2, 2): 4,
    (4, 1): 15, (3, 2): 35, (2, 3): 15,
}
QUAD_G3 = {
    (2, 2): 1,
    (3, 2): 7, (2, 3): 8,
}
QUAD_TWOPOINT = {1: (QUAD_G1, 5), 2: (QUAD_G2, 5), 3: (QUAD_G3, 5)}

HEX_G1 = {
    (3, 1): 1, (2, 2): 3, (1, 3): 1,
    (5, 1): 3, (4, 2): 24, (3, 3): 46, (2, 4): 24, (1, 5): 3,
}
HEX_G2 = {
    (3, 1): 2, (2, 2): 2,
    (5, 1): 12, (4, 2): 53, (3, 3): 53, (2, 4): 12,
}
HEX_G3 = {
    (2, 2): 1,
    (4, 2): 12, (3, 3): 33, (2, 4): 14,
}
HEX_TWOPOINT = {1: (HEX_G1, 6), 2: (HEX_G2, 6), 3: (HEX_G3, 6)}

QUAD_D = {
    (1, 0): 1,
    (2, 0): 3, (1, 1): 4,
    (3, 0): 10, (2, 1): 33, (1, 2): 16,
    (4, 0): 35, (3, 1): 202, (2, 2): 243, (1, 3): 64,
}
QUAD_Y = {
    (1, 1): 1,
    (2, 1): 7, (1, 2): 7,
    (3, 1): 38, (2, 2): 91, (1, 3): 38,
}

HEX_D1 = {
    (1, 0): -1,
    (2, 0): F(3, 2), (1, 1): F(3, 2),
    (3, 0): F(-29, 8), (2, 1): F(-53, 4), (1, 2): F(-45, 8),
    (4, 0): F(15, 2), (3, 1): 45, (2, 2): 48, (1, 3): F(21, 2),
}
HEX_D2 = {
    (1, 0): 1,
    (2, 0): F(3, 2), (1, 1): F(3, 2),
    (3, 0): F(29, 8), (2, 1): F(53, 4), (1, 2): F(45, 8),
    (4, 0): F(15, 2), (3, 1): 45, (2, 2): 48, (1, 3): F(21, 2),
}
HEX_Y1 = {
    (1, 1): 1,
    (2, 1): -3, (1, 2): -3,
    (3, 1): F(23, 2), (2, 2): 31, (1, 3): F(23, 2),
}
HEX_Y2 = {
    (1, 1): 1,
    (2, 1): 3, (1, 2): 3,
    (3, 1): F(23, 2), (2, 2): 31, (1, 3): F(23, 2),
}
