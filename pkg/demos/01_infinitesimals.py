# coding: utf-8

# # Infinite and infinitesimal elements
#
# Three ordered fields are shipped: the rationals Q, the rational functions
# Q(w) ordered at infinity, and the formal Laurent series Q((e)).  Every
# operation is exact.

from fractions import Fraction

from ordfield import get_field
from ordfield.laurent import SeriesSequence, ls_const, ls_monomial, ls_seq_limit

# ## Q(w): an element bigger than every integer
#
# A rational function is compared by its behaviour for large arguments, so
# `w` beats every constant.  The certificate is a degree count.

R = get_field("ratfun")
w = R.omega()
print("w > 10^6:", R.gt(w, R.const(10 ** 6)))
print("classify(w^2/(w+1)):", R.classify(w * w / (w + 1)).name)
print("1/w is", R.classify(1 / w).name)

# ## Q((e)): series in an infinitesimal
#
# Laurent series are lazy.  Coefficients are computed on demand and kept.

L = get_field("laurent", order=8)
e = L.epsilon()
geo = L.div(L.one, L.sub(L.one, e))
print("1/(1-e) =", L.format(geo))
print("(1+e)/(1-e) =", L.format(L.div(L.add(L.one, e), L.sub(L.one, e))))
print("e < 1/10^9:", L.lt(e, L.const(Fraction(1, 10 ** 9))))

# ## Limits that exist and limits that do not
#
# `e^n` stabilizes coefficientwise to 0.  The rationals `2^-n` never do:
# their constant coefficients keep changing.

powers = SeriesSequence(lambda n: ls_monomial(n), lambda k: k + 1)
print("lim e^n =", ls_seq_limit(powers).format(8))
halves = SeriesSequence(lambda n: ls_const(Fraction(1, 2 ** n)))
print("lim 2^-n:", ls_seq_limit(halves))
