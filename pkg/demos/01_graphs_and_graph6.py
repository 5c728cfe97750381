#!/usr/bin/env python3
"""Build small graphs, combine them, and round-trip through graph6."""

from factorlab import (
    complement,
    complete,
    components,
    cycle,
    delete_set,
    disjoint_union,
    edges_between,
    from_graph6,
    join,
    min_degree,
    star,
    to_graph6,
    vertices_of,
)

k4 = complete(4)
print("K_4:", k4, "degrees:", k4.degrees())

two_triangles = disjoint_union(complete(3), complete(3))
print("2 K_3 components:", [vertices_of(c) for c in components(two_triangles)])

wheel_ish = join(complete(1), cycle(5))
print("K_1 v C_5: hub degree", wheel_ish.degree(0), "min degree", min_degree(wheel_ish))

print("edges between hub and rim:", edges_between(wheel_ish, {0}, set(range(1, 6))))

print("complement of C_4 has", complement(cycle(4)).m, "edges (a perfect matching)")

smaller, labels = delete_set(wheel_ish, {0})
print("after deleting the hub:", smaller, "label map:", labels)

for g in (k4, star(7), cycle(6)):
    line = to_graph6(g)
    back = from_graph6(line)
    print(f"graph6 {line!r:12} parses back to an identical graph: {back == g}")
