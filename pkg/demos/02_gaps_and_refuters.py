# coding: utf-8

# # Gaps and refuters
#
# A gap is a cut with no element between its two halves.  Each failing
# completeness property is shown by a refuter: hand it any candidate and
# it returns an exact counterexample that re-checks itself.

from fractions import Fraction

from ordfield import get_field
from ordfield.probes import (bump_sum, cut_finite, cut_halo, cut_sqrt2, dyadic_approximants,
                             gap_contraction_build, nested_refuter, refute_cutpoint,
                             refute_gap_fixed_point)

Q = get_field("q")
L = get_field("laurent", order=6)

# ## The square root of 2 in Q
#
# Every candidate cutpoint is beaten by an element on the wrong side of it.

sqrt2 = cut_sqrt2(Q)
for c in (Fraction(3, 2), Fraction(7, 5), Fraction(17, 12)):
    w = refute_cutpoint(sqrt2, c)
    print(c, "->", w.elements[1], "|", w.certificate, "| verified:", w.verify())

# The dyadic approximants close in from both sides.

a, b = dyadic_approximants(sqrt2, 6)
print("a_n:", [str(x) for x in a])
print("b_n:", [str(x) for x in b])

# ## The halo of 3/2 and the finite elements of Q((e))
#
# In a field with infinitesimals the points infinitely close to 3/2 form a
# gap of their own, and so do the finite elements.

halo = cut_halo(L)
print(refute_cutpoint(halo, L.add(L.const(Fraction(3, 2)), L.epsilon())).certificate)
finite = cut_finite(L)
print(refute_cutpoint(finite, L.omega()).certificate)

# ## A contraction of Q with no fixed point
#
# The map pushes nested dyadic endpoints towards sqrt 2 with every slope at
# most 1/2.  Any rational candidate is eventually moved.

m = gap_contraction_build(sqrt2, depth=4)
print("x_k:", [str(x) for x in m.xs[:4]], "y_k:", [str(y) for y in m.ys[:4]])
print(refute_gap_fixed_point(sqrt2, Fraction(99, 70)).certificate)

# ## An unbounded continuous function on [1, 2]

for bound in (3, 10):
    x = sqrt2.dyadics().a(bound + 1)
    print(f"f({x}) = {bump_sum(sqrt2, x)} > {bound}")

# ## Nested intervals [n, w/n] with empty intersection

for c in (L.const(5), L.omega(), L.div(L.omega(), L.const(2))):
    print(nested_refuter(L, c).certificate)
