"""
Instance generator gallery
==========================

Four families of square-free Berge graphs, each with a stable labeling:

  prisms        two triangles joined by three paths of equal parity
  hyperprisms   one strip of parallel rungs plus two single rungs
  lk4           line graphs of K4 with subdivided edges
  random        a seeded mix (sparse bipartite, line graphs, prisms, ...)

Every generator validates its own output and warns instead of failing when
legal parameters happen to produce a square (for example unit prism rungs).
"""

from bergecolor import (
    HyperprismSpec,
    PrismSpec,
    contains_square,
    gen_hyperprism,
    gen_lk4_subdivision,
    gen_prism,
    gen_square_free_berge,
    is_berge,
    omega,
)


def describe(name, g):
    sq = "yes" if contains_square(g) is None else "NO"
    berge = "yes" if g.n <= 20 and is_berge(g).ok else "(unchecked)"
    print(
        f"{name:28s} n={g.n:3d} m={g.m:3d} omega={omega(g)} "
        f"square-free={sq} berge={berge}"
    )


describe("prism(2,2,2)", gen_prism(PrismSpec((2, 2, 2))))
describe("prism(3,5,7)", gen_prism(PrismSpec((3, 5, 7))))
describe("hyperprism((2,2),(2),(2))", gen_hyperprism(HyperprismSpec(((2, 2), (2,), (2,)))))
describe("hyperprism((3,3),(3),(3))", gen_hyperprism(HyperprismSpec(((3, 3), (3,), (3,)))))
describe("lk4(2,2,2,2,2,2)", gen_lk4_subdivision((2, 2, 2, 2, 2, 2)))
describe("lk4(3,3,3,2,2,2)", gen_lk4_subdivision((3, 3, 3, 2, 2, 2)))

print()
# same (n, seed) always gives the same graph, across processes and platforms
for seed in range(4):
    describe(f"random(n=18, seed={seed})", gen_square_free_berge(18, seed))

g1 = gen_square_free_berge(18, 2)
g2 = gen_square_free_berge(18, 2)
print("\ndeterministic rebuild:", g1.edges() == g2.edges())
