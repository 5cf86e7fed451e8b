"""Independent oracles shared by several test modules."""

from fractions import Fraction

import sympy

z, w, w1, w2 = sympy.symbols("z w w1 w2")
PARAMS = {name: sympy.Symbol(name) for name in ("alpha", "beta", "gamma", "delta")}


def to_sympy(sum_):
    """Differential sum as a sympy polynomial in z, w, w1=w', w2=w''."""
    out = sympy.Integer(0)
    for t in sum_.terms:
        c = sympy.Integer(0)
        for mono, v in t.coeff.terms:
            val = sympy.Rational(v.re.numerator, v.re.denominator) + sympy.I * sympy.Rational(
                v.im.numerator, v.im.denominator)
            for name, k in mono:
                val *= sympy.Symbol(name) ** k
            c += val
        out += c * z ** t.r * w ** t.s * w1 ** t.a * w2 ** t.b
    return sympy.expand(out)


def sympy_from_text(text):
    """Parse textbook notation with sympy itself (w' -> w1, w'' -> w2)."""
    src = text.replace("w''", "w2").replace("w'", "w1").replace("^", "**")
    return sympy.expand(sympy.sympify(src, locals={"z": z, "w": w, "w1": w1, "w2": w2,
                                                    **PARAMS}))


def elimination_orders(facet_points, all_points):
    """Solve q1 + g*q2 + g1*q3 + g2*q4 + f = 0 on the facet points directly.

    Returns (g, g1, g2, regime): the regime is read from the side of the
    plane (1, g, g1, g2) on which the remaining support lies.
    """
    g, g1, g2, f = sympy.symbols("g g1 g2 f")
    eqs = [q[0] + g * q[1] + g1 * q[2] + g2 * q[3] + f for q in facet_points]
    sol = sympy.solve(eqs, [g, g1, g2, f], dict=True)
    assert len(sol) == 1 and len(sol[0]) == 4, "facet system is not uniquely solvable"
    s = sol[0]
    vals = [Fraction(int(sympy.fraction(s[x])[0]), int(sympy.fraction(s[x])[1]))
            for x in (g, g1, g2, f)]
    side = {sympy.sign(q[0] + s[g] * q[1] + s[g1] * q[2] + s[g2] * q[3] + s[f])
            for q in all_points} - {0}
    assert len(side) == 1, "plane is not supporting"
    # outward normal is +(1, g, g1, g2) if the rest lies below the plane
    regime = "infinity" if side == {-1} else "zero"
    return tuple(vals[:3]), regime
