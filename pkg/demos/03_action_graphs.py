"""Finite windows of the thirteen infinite action graphs.

Each family records how tensoring with the natural module permutes indecomposables;
windows drop edges that would leave the box, and the Whittaker families live on
3-element orbit representatives where a self-loop appears.
"""
from sl3graphs import Box, CategoryId, Functor, generate, interior, pf_value

g = generate(CategoryId.N3, Functor.F, Box(-4, -1, -4, -1))
print(f"bottom family on {tuple(g.window)}: {len(g.vertices)} vertices, "
      f"{sum(e.mult for e in g.edges)} arrows")
print("the triple arrow near the most singular point:")
for e in g.edges:
    if e.mult > 1:
        print(f"  {e.src} -> {e.dst}  x{e.mult}")

print("\nupper middle family: long wall-translation jumps leave the q=0 row")
g = generate(CategoryId.N1, Functor.F, Box(-8, -1, 0, 6))
for e in g.edges:
    if e.move == "long":
        print(f"  {e.src} -> {e.dst}")

print("\nWhittaker quotient: constant out-degree 3 with a self-loop at the hub")
g = generate(CategoryId.WHITTAKER1, Functor.F, Box(-9, 3, -9, 3))
loops = [e for e in g.edges if e.src == e.dst]
print(f"  {len(g.vertices)} orbit vertices, loops at {[e.src for e in loops]}")

print("\ninterior = vertices whose neighborhoods stay inside the window:")
g = generate(CategoryId.REGULAR, Functor.F, Box(0, 5, 0, 5))
print(f"  window has {len(g.vertices)} vertices, depth-1 interior {len(interior(g, 1))},"
      f" depth-2 interior {len(interior(g, 2))}")

print("\nDOT export of a small window (render with graphviz):")
print(generate(CategoryId.M5, Functor.F, Box(-2, 2, -2, 4)).to_dot())
