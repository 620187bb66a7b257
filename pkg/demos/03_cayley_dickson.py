"""The Cayley-Dickson tower over Q and where the classical laws break.

Doubling with (a,b)(c,d) = (ac - conj(d) b, da + b conj(c)) walks
Q -> complex-like -> quaternions -> octonions -> sedenions; associativity
survives to the quaternions, alternativity to the octonions, and the
sedenions lose both.
"""

from grpd import Field, analyze_algebra, cayley_dickson_chain
from grpd.skewring import invert_in

Q = Field(0)

names = ["rationals", "complex-like plane", "quaternions", "octonions", "sedenions"]
for k, name in enumerate(names):
    alg = cayley_dickson_chain(Q, k)
    print(
        f"{name:22s} dim {alg.dim:2d}  associative {str(alg.is_associative()):5s}"
        f"  alternative {alg.is_alternative()}"
    )

print("\n== anti-commuting imaginary units of the octonions ==")
octo = cayley_dickson_chain(Q, 3)
e1, e2 = octo.basis_vector(1), octo.basis_vector(2)
print("e1 e2 =", [str(c) for c in octo.multiply(e1, e2)])
print("e2 e1 =", [str(c) for c in octo.multiply(e2, e1)])

print("\n== the octonion center is a field ==")
center = octo.center()
print("center dimension:", center.dim)
sub, _ = octo.subalgebra(center)
x = [Q(2) * c for c in sub.basis_vector(0)]
print("2 * 1 has inverse in the center:", invert_in(sub, x))

print("\n== full analysis report for the octonions ==")
print(analyze_algebra(octo))
