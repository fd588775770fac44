"""
Checking certificates
=====================

Every number reported by the solvers comes with a witness that can be
re-checked from the distance matrix alone.
"""

from bmp import Broadcast, Multipacking, all_pairs, verify_broadcast, verify_multipacking
from bmp import generators as gen
from bmp.certify import lemma1_bound_check, pairwise_sufficient_condition
from bmp.distance import shortest_path

g = gen.cycle(4)
dm = all_pairs(g)

# Two opposite vertices of C4 share the radius-1 ball around either middle
# vertex, so {0, 2} is not a multipacking.  The violation names that ball.
print(verify_multipacking(dm, Multipacking((0, 2))))

# A single vertex of power 2 covers C5.
c5 = all_pairs(gen.cycle(5))
print("C5 broadcast {0: 2}:", verify_broadcast(c5, Broadcast({0: 2})))
print("C5 broadcast {0: 1}:", verify_broadcast(c5, Broadcast({0: 1})).to_json())

# Every third vertex of a shortest path meets each ball of radius r in at
# most ceil((2r+1)/3) vertices.
g = gen.grid(5, 5)
dm = all_pairs(g)
path = shortest_path(g, 0, 24)
report = lemma1_bound_check(dm, path)
print(f"grid path {list(path.vertices)}: holds={report.holds}, "
      f"worst count/bound {report.max_ratio:.2f} at center {report.worst_center}, r={report.worst_radius}")

# A pairwise distance condition is enough for a multipacking but not needed:
# {0, 4, 8} on C12 is a multipacking with every pair at distance 4.
c12 = all_pairs(gen.cycle(12))
print("C12 {0,4,8}: multipacking", verify_multipacking(c12, [0, 4, 8]) is None,
      "pairwise condition", pairwise_sufficient_condition(c12, [0, 4, 8]))
