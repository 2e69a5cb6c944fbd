"""Points over Grassmann algebras, lifting multilinear maps, and why
functoriality under base change is the correctness criterion.

Run with:  python3 demos/02_points_lift_reconstruct.py
"""

import random

from superpoints import (
    GrassmannElement,
    GrassmannMorphism,
    LambdaPoint,
    MultilinearMap,
    ReconstructionError,
    SuperSpace,
    base_change,
    check_naturality,
    decompose_point,
    injected_constant_family,
    lift_family,
    lift_multilinear,
    morphism_to_point,
    point_to_morphism,
    reconstruct_multilinear,
    superrep_check,
    vbar_module,
    vnil_module,
)
from superpoints.sampling import random_multilinear, random_point

# A point of the format 1|1 over the algebra on 2 generators: one even
# coordinate (even Grassmann element) and one odd coordinate.
V = SuperSpace(1, 1)
x = LambdaPoint(V, 2, [
    GrassmannElement(2, {0: 3, 0b11: 1}),   # 3 + t1*t2
    GrassmannElement.theta(2, 1),           # t1
])
print("point x:", x)

body_vec, soul = decompose_point(x)
print("body:", body_vec.coords, " soul:", soul)

# Base change pushes a point along a morphism of Grassmann algebras; the map
# to the ground field keeps only rational bodies.
eps = GrassmannMorphism.terminal(2)
print("x over the ground field:", base_change(eps, x))
print()

# Lifting: an even bilinear map on the purely odd line evaluated on points
# multiplies the Grassmann coordinates in reversed order.
odd_line = SuperSpace(0, 1)
out = SuperSpace(1, 0)
b = MultilinearMap((odd_line, odd_line), out, {((1, 1), 1): 1})
x1 = LambdaPoint(odd_line, 2, [GrassmannElement.theta(2, 1)])
x2 = LambdaPoint(odd_line, 2, [GrassmannElement.theta(2, 2)])
print("lift of b at (t1 x v, t2 x v):", lift_multilinear(b, (x1, x2)).coords[0])
print()

# Reconstruction probes the family with fresh generators and recovers the
# unique multilinear map -- a round trip.
rng = random.Random(0)
f = random_multilinear(rng, (V, V), SuperSpace(2, 1))
print("round trip recovers f exactly:", reconstruct_multilinear(lift_family(f)) == f)

# A family gluing the fixed monomial t1*t2 into every algebra that has it is
# still polynomial at every single algebra, but it is NOT functorial: killing
# a generator moves the constant.  Reconstruction refuses it with a witness.
artifact = injected_constant_family(MultilinearMap.identity(out), 1, (1, 2))
try:
    reconstruct_multilinear(artifact)
except ReconstructionError as exc:
    print("artifact family rejected:", exc)

kill = GrassmannMorphism.kill_generator(2, 1)
report = check_naturality(artifact, kill, [(random_point(rng, out, 2),)])
print("naturality violations:", len(report.violations))
print()

# Superpoints: morphisms between Grassmann algebras are the same thing as
# points of purely odd formats, compatibly with composition on both sides.
phi = GrassmannMorphism(1, 3, [
    GrassmannElement(3, {0b111: 1, 0b010: 1})   # t1 -> t1*t2*t3 + t2
])
pt = morphism_to_point(phi)
print("morphism as point of 0|1:", pt)
print("and back:", point_to_morphism(pt) == phi)
print()

# Superrepresentability: which functors of points come from a format?  The
# full point functor always does; the nilpotent part only for purely odd
# formats (its ground value is zero but higher points are not).
print("points of 1|2:    ", superrep_check(vbar_module(SuperSpace(1, 2), 4)))
print("nilpotents of 1|0:", superrep_check(vnil_module(SuperSpace(1, 0), 4)))
print("nilpotents of 0|1:", superrep_check(vnil_module(SuperSpace(0, 1), 4)))
