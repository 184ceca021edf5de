"""Frozen expected values. Written down before the implementation was run against them."""

from fractions import Fraction as F

# Completing lines 1 + s1 x and 1 + s2 y: one new ray.
A2_SCATTERED = [((1, 1), {(0, 0, (0, 0)): 1, (1, 1, (1, 1)): 1})]

# Lines (1 + s1 x)^2, (1 + s2 y)^2: the diagonal carries (1 - s1 s2 x y)^-4,
# the (2,1) and (1,2) rays carry (1 + s1^2 s2 x^2 y)^2 and (1 + s1 s2^2 x y^2)^2.
SQUARED_DIAGONAL_LEADING = {(1, 1, (1, 1)): 4, (2, 2, (2, 2)): 10, (3, 3, (3, 3)): 20}
SQUARED_21 = {(2, 1, (2, 1)): 2, (4, 2, (4, 2)): 1}

# dP5 central chamber at epsilon = 0, coefficients as polynomials in A, B, C
# keyed by their (A, B, C) exponent.
DP5_CENTRAL = {
    (1, 0): {(0, 0, 0): 1},
    (0, 1): {(0, 0, 0): 1},
    (-1, 0): {(1, 0, 0): 1, (0, 0, 1): 1},
    (0, -1): {(0, 1, 0): 1, (0, 0, 1): 1},
    (-1, 1): {(1, 0, 0): 1},
    (1, -1): {(0, 1, 0): 1},
    (-1, -1): {(0, 0, 1): 1},
}
DP5_CENTRAL_EXPONENTS = sorted(DP5_CENTRAL)

CUBIC_COUNT = 21
CUBIC_MINIMAL_CAP = 4

# F2: exponent -> {class monomial (by label name): coefficient}
F2_TERMS = {
    (-1, 2): {("beta2",): 1},
    (0, -1): {("beta1",): 1},
    (0, 1): {("beta3",): 1, ("beta3", "sD3"): 1},
    (1, 0): {("beta4",): 1},
}
# F3 with beta2 filtered out; the coefficient 2 sits on y^2.
F3_TERMS = {
    (0, -1): {("beta1",): 1},
    (0, 1): {("beta3",): 1},
    (1, 0): {("beta4",): 1},
    (-1, 3): {("beta3", "alpha"): 1},
    (0, 2): {("beta4", "alpha"): 2},
    (-1, 4): {("beta4", "alpha", "alpha"): 1},
}

# Blowing up the corner (1,1) of P^2 and then the corner (2,1) leaves the
# divisor of (1,1) as a single -2 curve, so its coefficient is C(2, 1) = 2.
CORNER_FINAL_FAN = ((1, 0), (2, 1), (1, 1), (0, 1), (-1, -1))
CORNER_COEFFS = {(1, 0): 1, (2, 1): 1, (1, 1): 2, (0, 1): 1, (-1, -1): 1}

# Rank-3 cluster example: quotient images and wall functions.
RANK3_IMAGES = [(1, 0), (0, 1), (-1, -1)]

# Displayed quintic for lambda, highest degree first (strings in A, B, C).
QUINTIC = ["1", "-1", "-2*A*B", "2*A*B - C**2", "A**2*B**2 - C**2*(A + B)", "-A*B*C**2 - A**2*B**2"]

DP5_DEFAULT = dict(a=2, b=2, c=5, a_prime=1, b_prime=1, t=0.1)
DP5_CASE1_PREDICTED = [(0.0, 2.0), (2.0, 0.0)]

CUBIC_STOP = (F(4) + F(1, 997), F(4) + F(3, 1009))
