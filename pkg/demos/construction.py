"""
Building large multipackings in polynomial time
===============================================

Two shortest paths sharing a midpoint give a multipacking of size 2k + k'.
"""

from bmp import all_pairs, approx_multipacking, mp_exact, verify_multipacking
from bmp import generators as gen
from bmp.construct import make_configuration, theorem2_construct

# The spider: a path of length 6k with a branch of length 3k + 3k' hung at
# its midpoint x.  Every third vertex of the long path plus k' - 1 vertices
# deep on the branch.
k, kp = 3, 2
g = gen.spider(k, kp)
dm = all_pairs(g)
cfg = make_configuration(g, x=3 * k, y=g.n - 1, u=0, v=6 * k, k=k, k_prime=kp)
trace = theorem2_construct(dm, cfg)
print(f"spider({k},{kp}): P1={trace.p1} P2={trace.p2} size={len(trace.members)} (2k+k' = {2 * k + kp})")
print("verified:", verify_multipacking(dm, trace.members) is None)

# On an arbitrary connected graph the configuration is found from a diametral
# path and a most distant vertex from its middle.
for name, g in [("C24", gen.cycle(24)), ("grid 5x5", gen.grid(5, 5)), ("gnp", gen.gnp(60, 0.06, seed=1))]:
    packing, trace = approx_multipacking(g)
    exact = mp_exact(g).value if g.n <= 24 else "n/a"
    print(f"{name}: mode={trace.mode} d={trace.diameter} r={trace.radius} "
          f"size={len(packing)} guarantee={trace.target} exact={exact}")
