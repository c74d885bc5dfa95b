"""Tensor products of simple sl3-modules, exactly.

The Grothendieck ring of finite-dimensional sl3-modules is Z[x, y]; the class of the
simple with highest weight (i, j) is a basis polynomial whose recursion mirrors
tensoring with the two 3-dimensional generators.  Everything below is integer-exact.
"""
from sl3graphs import dim, dim_triangle_row, tensor, tensor_with_f, to_ubasis, upoly

print("Basis polynomials for small labels:")
for label in [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1)]:
    print(f"  U{label} = {upoly(*label)}")

print("\nThe adjoint module squared:  L(1,1) (x) L(1,1)")
for label, mult in sorted(tensor((1, 1), (1, 1)).items()):
    print(f"  L{label} appears {mult}x   (dim {dim(label)})")
total = sum(m * dim(l) for l, m in tensor((1, 1), (1, 1)).items())
print(f"  dimension check: {dim((1,1))}^2 = {total}")

print("\nTensoring with the natural module F = L(1,0) walks the label lattice:")
for label in [(0, 0), (3, 0), (2, 2)]:
    print(f"  F (x) L{label} = {tensor_with_f(label)}")

print("\nDimension triangle (each row n lists dim L(n,0) ... dim L(0,n)):")
for n in range(5):
    print(f"  row {n}: {dim_triangle_row(n)}")

print("\nConverting an arbitrary polynomial to tensor-multiplicity coordinates:")
f = upoly(1, 0) * upoly(1, 0) * upoly(1, 0)
print(f"  x^3 decomposes as {to_ubasis(f)}  (F^(x)3 = 27 = 10+2*8+1)")
