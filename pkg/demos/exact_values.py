"""
Exact multipacking and broadcast numbers
========================================

Small cycles and the three extremal graphs shipped with the generators.
"""

from bmp import gb_exact, mp_exact
from bmp import generators as gen

# Every dominating broadcast costs at least as much as any multipacking has
# members, so mp <= gb.  On C4 and C5 the gap is already a factor of two.
for name, g in [("C4", gen.cycle(4)), ("C5", gen.cycle(5))]:
    mp, gb = mp_exact(g), gb_exact(g)
    print(f"{name}: mp={mp.value} {list(mp.witness.members)}  gb={gb.value} {gb.witness.powers}")

# The three 12-16 vertex graphs keep the ratio gb/mp at exactly 2 with mp = 2.
for name in ("fig3a", "fig3b", "fig3c"):
    g = gen.generate(name)
    mp, gb = mp_exact(g), gb_exact(g)
    print(f"{name}: n={g.n} m={g.num_edges}  mp={mp.value}  gb={gb.value}  "
          f"search nodes {mp.nodes_explored}+{gb.nodes_explored}")

# Long cycles: mp(C_n) = floor(n/3) and gb(C_n) = ceil(n/3).
for n in (18, 20, 22):
    g = gen.cycle(n)
    print(f"C{n}: mp={mp_exact(g).value} gb={gb_exact(g).value}")
