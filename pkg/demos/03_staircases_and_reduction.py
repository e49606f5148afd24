"""
Staircases and the reduction engine
===================================

The conductor of k[[t^3, t^5]] = k[[x, y]]/(x^5 - y^3) is a monomial ideal.
Its staircase can be walked down to the maximal ideal (x, y), one
annihilator step at a time.
"""

from staircase_kit import curve_ring, normalize, reduce_to_maximal, staircase_of_conductor, verify
from staircase_kit.truncmono import contains_monomial, pair_value

I = staircase_of_conductor(5, 3)
print(I.ring)
print(I)                       # (x^3, x y, y^2)

# x = t^3 and y = t^5, so the generators sit at values 9, 8 and 10
print([pair_value(5, 3, p) for p in I.pairs])

# membership respects the relation: x^5 = y^3 is in (y^2)
print(contains_monomial(I, 5, 0), contains_monomial(I, 0, 1))

###############################################################################
# Each step writes I = x J + (y^e) and checks that the annihilator of x in
# k[x,y]/(x^a, y^e) already lies in x J.

cert = reduce_to_maximal(I)
for k, step in enumerate(cert.steps, 1):
    print(f"step {k}: {step.axis}  {step.ideal_before}  ->  {step.ideal_after}"
          f"   0:{step.axis} generated by {step.annihilator_check.ann_generator} in {step.ring}")
print("final", cert.final_ideal)
print(verify(cert))

###############################################################################
# A longer chain: x-steps until (x, y^d), then y-steps.

J = normalize(curve_ring(9, 8), [(6, 0), (4, 2), (1, 5), (0, 7)])
cert = reduce_to_maximal(J)
print("".join(s.axis for s in cert.steps), len(cert.steps), "steps")
print(verify(cert).ok)
