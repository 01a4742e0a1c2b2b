"""Tour of the exact symbolic kernel.

Polynomials carry exact rational coefficients in named graded rings; ideals
support division with remainder, reduced Groebner bases, elimination,
quotients and certified saturation.  Everything here is deterministic:
rerunning the script prints byte-identical output.
"""

from quadbir import (
    DEGREVLEX,
    Ideal,
    LEX,
    Ring,
    buchberger,
    eliminate,
    ideal_quotient,
    membership,
    reduce,
    saturate,
)

# --- rings and arithmetic ---------------------------------------------------

R = Ring(["x", "y", "z"])
x, y, z = R.gens()

p = (x + y) * (x - y)
print("(x + y)(x - y) =", p)
print("parse round trip:", R.parse("x^2 - y^2") == p)
print("derivative in y:", p.diff("y"))

# --- division with remainder -------------------------------------------------

f = R.parse("x^2*z + x*y^2 - z^3")
basis = [R.parse("x*y - 1"), R.parse("y^2 - z")]
r, q = reduce(f, basis, LEX, with_quotients=True)
print("\nremainder:", r)
check = r
for qi, gi in zip(q, basis):
    check = check + qi * gi
print("f reassembles from quotients:", check == f)

# --- the twisted cubic -------------------------------------------------------

P3 = Ring(["x0", "x1", "x2", "x3"])
tc = Ideal(
    P3,
    [P3.parse("x1^2 - x0*x2"), P3.parse("x1*x2 - x0*x3"), P3.parse("x2^2 - x1*x3")],
)
gb = buchberger(tc, DEGREVLEX)
print("\ntwisted cubic reduced basis (already a basis):")
for g in gb:
    print("   ", g)
print("membership of x0*x3^2 - x1*x2*x3:", membership(P3.parse("x0*x3^2 - x1*x2*x3"), tc))

# --- elimination: implicitization ---------------------------------------------

# the graph of t -> (t, t^2) projects to the parabola
Rt = Ring(["t", "u", "v"])
graph = Ideal(Rt, [Rt.parse("u - t"), Rt.parse("v - t^2")])
print("\neliminating the parameter:", [str(g) for g in eliminate(graph, 1).generators])

# --- quotient and saturation ---------------------------------------------------

A = Ring(["x", "y"])
ax, ay = A.gens()
I = Ideal(A, [ax * ay])
print("\n(x*y : x) =", [str(g) for g in ideal_quotient(I, ax).generators])
print("(x*y : x^inf) =", [str(g) for g in saturate(I, ax).generators])
