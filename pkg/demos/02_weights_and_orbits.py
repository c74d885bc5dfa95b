"""The shifted Weyl-group action on exact weights and the coset taxonomy.

Weights are a coset tag plus integer offsets; the scalar in a non-integral base point
never materializes because every predicate depends only on the offsets.
"""
from sl3graphs import (
    CosetClass,
    Weight,
    WeylElem,
    category_of_simple,
    dot,
    dot_orbit,
    integral,
    is_singular,
    region,
    stabilizer,
)

lam = integral(0, 0)
print(f"dot-orbit of {lam.off}:")
for w in sorted(dot_orbit(lam)):
    print(f"  {w.off}")

print("\nSingularity walls (p = -1, q = -1, p + q = -2):")
for off in [(-1, 5), (3, -1), (-3, 1), (-1, -1), (2, 2)]:
    lam = integral(*off)
    stab = sorted(e.value for e in stabilizer(lam))
    print(f"  {off}: singular={is_singular(lam)}, stabilizer={stab}")

print("\nEvery weight sits in one region, which determines its filtration:")
for cls, off in [
    (CosetClass.INTEGRAL, (4, 1)),
    (CosetClass.INTEGRAL, (-2, 3)),
    (CosetClass.INTEGRAL, (-3, -4)),
    (CosetClass.S_WALL, (-4, 2)),
    (CosetClass.W0_WALL, (1, 2)),
    (CosetClass.THIRD_ONE, (0, 0)),
]:
    lam = Weight(cls, off)
    cats = [c.value for c in category_of_simple(lam)]
    print(f"  {cls.value:9s} {off}: region={region(lam).value:13s} -> {cats}")

print("\nOn the third-integral cosets only the rotation {e, sr, rs} survives:")
lam = Weight(CosetClass.THIRD_ONE, (-1, -1))
for w in (WeylElem.SR, WeylElem.RS):
    print(f"  {w.value}.{lam.off} = {dot(w, lam).off}")
print("  (whittaker flag):",
      [c.value for c in category_of_simple(lam, whittaker=True)])
