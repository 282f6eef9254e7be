"""
The 27 line classes and the 36 double sixes
===========================================

"""

from collections import Counter

from doublesix.lattice import E, F, blowdown_line_class, double_sixes, lines_27

# the line classes on the blown-up plane, in lattice coordinates
lines = lines_27()
print("line classes:", len(lines))
print("first few:", ", ".join(str(l) for l in lines[:4]))

# every line has self-intersection -1 and meets K with -1
print("self-intersections:", {l.intersect(l) for l in lines})

# any two distinct lines meet in 0 or 1; each line meets exactly ten others
meets = Counter()
for i, a in enumerate(lines):
    meets[sum(1 for j, b in enumerate(lines) if i != j and a.intersect(b) == 1)] += 1
print("neighbours per line:", dict(meets))

# the double sixes: two disjoint sixtuples in complementary incidence
sixes = double_sixes()
print("double sixes:", len(sixes))
print("all incidence checks pass:", all(s.check() for s in sixes))

# the classical one pairs the point blow-ups with the conic classes
classical = sixes[0]
print("classical first:", classical.a == E and classical.b == F)

# how many exceptional classes appear in the first sixtuple of each
types = Counter(sum(1 for cls in s.a if cls in E) for s in sixes)
print("exceptional classes in the leading sixtuple:", dict(sorted(types.items())))

# contracting the conic sixtuple turns lines of the plane into quintics
print("line class after contracting the conics:", blowdown_line_class(F))
