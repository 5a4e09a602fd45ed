"""
Good partitions, by hand and by search
======================================

A good partition splits the vertices into five sets (K1, K2, K3, L, R) so
that L and R see nothing of each other, K1 u K2 and K2 u K3 are cliques, and
three path/triad conditions hold.  The solver colors L's side and R's side
separately and reconciles them across the cutset K1 u K2 u K3.

This script finds one on the 6-cycle, shows what the verifier says about a
broken variant, and counts the frames the search walks through.
"""

from bergecolor import (
    GoodPartition,
    Graph,
    enumerate_frames,
    find_good_partition,
    find_triads,
    verify_good_partition,
)


def cycle(n):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


g = cycle(6)
print("triads of C6:", find_triads(g))

# the search tries frames (two cliques around a non-edge) and refines each
print("frames to consider:", sum(1 for _ in enumerate_frames(g)))

stats = {}
part = find_good_partition(g, stats)
print("\nfound:", part)
print("search stats:", stats)
print("verifier says:", verify_good_partition(g, part))

# pull vertex 5 out of L and into K1: 1 and 5 are not adjacent in C6,
# so K1 u K2 stops being a clique
broken = GoodPartition(
    k1=frozenset({1, 5}),
    k2=part.k2,
    k3=part.k3,
    l=frozenset({0}),
    r=part.r,
)
verdict = verify_good_partition(g, broken)
print("\nbroken variant:", verdict)
print("violated condition:", verdict.condition, "witness:", verdict.witness)
