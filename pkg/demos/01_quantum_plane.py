"""Expanding (x + y)^n when yx = qxy."""

from qtree import expand_power, q_binomial, q_multinomial, verify_multinomial_theorem

# every word in x, y is pushed into normal order; each swap costs a factor q
for n in (2, 3, 4):
    print(f"(x + y)^{n}")
    print(expand_power(2, n))
    print()

# the middle coefficient of the fourth power is a q-binomial
print(expand_power(2, 4).terms[(2, 2)], "==", q_binomial(4, 2))

# three variables, same story with q-multinomials
e = expand_power(3, 3)
print(e.terms[(1, 1, 1)], "==", q_multinomial([1, 1, 1]))

for k, top in ((2, 8), (3, 5)):
    print(k, "variables:", all(verify_multinomial_theorem(k, n) for n in range(top + 1)))
