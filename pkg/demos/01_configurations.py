"""
Six labelled points and their linear systems
============================================

"""

from fractions import Fraction

# the reference configuration: a projective frame plus two extra points
from doublesix.plane import REF6, Config6, is_general_position, linear_system, tangent_cone

print("points:")
for label, p in enumerate(REF6.points, start=1):
    print(f"  x{label} = {p}")

# general position means no three collinear and no conic through all six
verdict = is_general_position(REF6)
print("general position:", verdict.ok, "-", verdict.describe())

# a configuration with a collinear triple is rejected with a witness
bad = Config6([(1, 0, 0), (0, 1, 0), (1, 1, 0), (1, 1, 1), (1, 2, 3), (2, 5, 1)])
bad_verdict = is_general_position(bad)
print("degenerate example:", bad_verdict.describe())

# sextics with double points at all six: a ten-dimensional space
double = [(p, 2) for p in REF6.points]
sextics = linear_system(6, double)
print("sextics double at all six points:", len(sextics.basis), "dimensions")

# quintics with the same double points: the net used by the second model
quintics = linear_system(5, double)
print("quintics double at all six points:", len(quintics.basis), "dimensions")

# local structure of a basis member at a configuration point
member = sextics.basis[0]
cone = tangent_cone(member, REF6.points[0])
print("first basis member at x1: multiplicity", cone.multiplicity, "node:", cone.is_node)

# scaling representatives never changes any of this
rescaled = REF6.rescale([Fraction(3), 1, 1, Fraction(1, 2), 5, 7])
print("rescaled still general:", is_general_position(rescaled).ok)
