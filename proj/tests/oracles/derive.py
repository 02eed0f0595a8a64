"""Exact rational reference values for the C++ unit tests.

Everything here is computed with fractions.Fraction from first principles
(group law, brute-force precedence integrals, closed-form passage times),
independently of the library. Run: python3 derive.py
"""
from fractions import Fraction as F
from itertools import product


def mul(a, b):
    (x, y), (xp, yp) = a, b
    pairs = [(0, 1), (0, 2), (1, 2)]
    z = [x[i] + xp[i] for i in range(3)]
    w = [y[k] + yp[k] + x[i] * xp[j] - x[j] * xp[i] for k, (i, j) in enumerate(pairs)]
    return (z, w)


def flow(letter, t):
    x = [F(0)] * 3
    x[letter - 1] = t
    return (x, [F(0)] * 3)


def endpoint(word):
    g = ([F(0)] * 3, [F(0)] * 3)
    for letter, t in word:
        g = mul(g, flow(letter, t))
    return g


def precedence(word, i, j):
    # P(U_i < U_j) with U_l uniform on the time set of letter l, by
    # integrating over pairs of arcs; arcs of different letters never overlap.
    times, t0 = [], F(0)
    for letter, d in word:
        times.append((letter, t0, t0 + d))
        t0 += d
    ti = sum(b - a for l, a, b in times if l == i)
    tj = sum(b - a for l, a, b in times if l == j)
    s = F(0)
    for (l1, a1, b1), (l2, a2, b2) in product(times, times):
        if l1 == i and l2 == j and b1 <= a2:
            s += (b1 - a1) * (b2 - a2)
    return s / (ti * tj)


def pqr(word):
    return (precedence(word, 1, 2), precedence(word, 2, 3), precedence(word, 3, 1))


def show(name, v):
    print(name, [str(x) for x in v], [float(x) for x in v])


a = ([F(1), F(2), F(3)], [F(1, 2), F(-1), F(2)])
b = ([F(-1), F(1, 2), F(2)], [F(1), F(1), F(1)])
ab = mul(a, b)
show("group ab.x", ab[0])
show("group ab.y", ab[1])

w = [(1, F(1, 4)), (3, F(1, 3)), (2, F(1, 2)), (1, F(3, 4)), (3, F(2, 3)), (2, F(1, 2))]
g = endpoint(w)
show("word endpoint.x", g[0])
show("word endpoint.y", g[1])
show("word pqr", pqr(w))
show("reverse pqr", pqr(list(reversed(w))))

show("witness (1,1/2,1/2)", pqr([(3, F(1, 2)), (1, F(1)), (2, F(1)), (3, F(1, 2))]))
show("witness (0.3,0.3,1)", pqr([(2, F(3, 10)), (3, F(1)), (2, F(2, 5)), (1, F(1)), (2, F(3, 10))]))
show("even quadric a=b=1/2", pqr([(1, F(1, 2)), (2, F(1, 2)), (3, F(1)), (1, F(1, 2)), (2, F(1, 2))]))
show("odd quadric a=b=1/2", pqr([(2, F(1, 2)), (1, F(1, 2)), (3, F(1)), (2, F(1, 2)), (1, F(1, 2))]))
show("flat b=1/5 c=3/10", pqr([(2, F(1, 5)), (1, F(1)), (2, F(3, 10)), (3, F(1)), (2, F(1, 2))]))
show("diagonal 3123 a=1/2", pqr([(3, F(1, 2)), (1, F(1)), (2, F(1)), (3, F(1, 2))]))
show("two-block flat 1,2,1,2,3,2", pqr([(1, F(1, 5)), (2, F(1, 10)), (1, F(4, 5)), (2, F(3, 10)), (3, F(1)), (2, F(3, 5))]))

# Adjoint: h = (1, 1/5, -1/2), (h12, h23, h31) = (7/10, 2/5, 11/10).
h = [F(1), F(1, 5), F(-1, 2)]
h12, h23, h31 = F(7, 10), F(2, 5), F(11, 10)
C = h[0] * h23 + h[1] * h31 + h[2] * h12
K = h12 + h23 + h31 - C
print("casimir", C, float(C), "K", K, float(K))
print("tau F1", K / (h31 * h12), float(K / (h31 * h12)))
print("tau F2", K / (h12 * h23), float(K / (h12 * h23)))
print("tau F3", K / (h23 * h31), float(K / (h23 * h31)))
# First arc on F1: hdot = R e_1 = (0, -h12, h31) with R = [[0,h12,-h31],[-h12,0,h23],[h31,-h23,0]].
# h2 decreases, h3 rises to 1 at t = (1 - h3)/h31.
t1 = (1 - h[2]) / h31
print("first arc", t1, float(t1), "h at switch", [str(h[0]), str(h[1] - h12 * t1), str(h[2] + h31 * t1)])

# Dice: xi1 = {0: 1/2, 3: 1/2}, xi2 = {1: 1/3, 4: 2/3}, xi3 = {2: 1/4, 5: 3/4}.
def less(di, dj):
    return sum(mi * mj for vi, mi in di for vj, mj in dj if vi < vj)
d1 = [(0, F(1, 2)), (3, F(1, 2))]
d2 = [(1, F(1, 3)), (4, F(2, 3))]
d3 = [(2, F(1, 4)), (5, F(3, 4))]
show("dice", (less(d1, d2), less(d2, d3), less(d3, d1)))
