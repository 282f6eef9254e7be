"""
Exceptional conics and the association involution
=================================================

"""

from doublesix.association import exceptional_conics, second_model
from doublesix.plane import REF6, is_general_position, projective_equivalence

# conic i is the unique conic through the five points other than x_i
conics = exceptional_conics(REF6)
for i, f in enumerate(conics, start=1):
    print(f"f{i} = {f}")

# incidence: f_i vanishes at x_j exactly when j differs from i
incidence = [
    "".join("." if conics[i].eval(p.coords) == 0 else "*" for p in REF6.points)
    for i in range(6)
]
print("incidence (rows f1..f6, * marks the omitted point):")
for row in incidence:
    print(" ", row)

# the second plane model: quintics double at five points, simple at one
model = second_model(REF6)
print("quintic net dimension:", len(model.quintic_basis))

# contracting the six conics produces the associated configuration
associated = model.associated
print("associated points:")
for label, p in enumerate(associated.points, start=1):
    print(f"  y{label} = {p}")
print("associated is general:", is_general_position(associated).ok)

# association is an involution up to projectivity, labels preserved
back = second_model(associated).associated
print("involution up to projectivity:", projective_equivalence(REF6, back) is not None)

# the reference configuration is not equivalent to its own associated
print(
    "self-associated:",
    projective_equivalence(REF6, associated, respect_labels=False) is not None,
)
