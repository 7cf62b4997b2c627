#!/usr/bin/env python3
"""Generate high-precision reference values for the C++ test suite.

Everything here is computed with mpmath at 50 significant digits, using
straightforward term-by-term evaluation (no shared code with the C++
implementation).  The printed constants are frozen into the unit tests;
rerun this script if a reference value ever needs to be re-derived.
"""

import itertools

import mpmath as mp

mp.mp.dps = 50


def fmt(x):
    return mp.nstr(x, 18, strip_zeros=False)


def qpoch(a, q, l):
    p = mp.mpf(1)
    for k in range(l):
        p *= 1 - a * q**k
    return p


def partitions_box(n, m):
    """All weakly decreasing n-tuples with entries in 0..m, ascending lex."""
    out = []

    def rec(prefix, lo_remaining):
        if len(prefix) == n:
            out.append(tuple(prefix))
            return
        hi = m if not prefix else prefix[-1]
        for v in range(0, hi + 1):
            rec(prefix + [v], lo_remaining)

    # ascending lex: first coordinate slowest
    def rec2(prefix):
        if len(prefix) == n:
            out.append(tuple(prefix))
            return
        hi = m if not prefix else prefix[-1]
        for v in range(0, hi + 1):
            rec2(prefix + [v])

    rec2([])
    out.sort()
    return out


def toda_weight(mu, n, m, q, ap, am):
    mu_ext = [m] + list(mu) + [0]
    den = qpoch(ap, q, m - mu[0]) * qpoch(am, q, mu[-1])
    for i in range(n + 1):
        den *= qpoch(q, q, mu_ext[i] - mu_ext[i + 1])
    return qpoch(q, q, m) / den


def toda_matrix(n, m, q, pp, qp, pm, qm):
    """Dense matrix of the hopping operator, row = source configuration."""
    ap, bp = pp * qp, pp + qp
    am, bm = pm * qm, pm + qm
    basis = partitions_box(n, m)
    index = {mu: r for r, mu in enumerate(basis)}
    size = len(basis)
    M = [[mp.mpf(0)] * size for _ in range(size)]
    for r, mu in enumerate(basis):
        mu_ext = [m] + list(mu) + [0]
        M[r][r] = bp * (1 - q ** (m - mu[0])) + bm * (1 - q ** mu[-1])
        for i in range(1, n + 1):
            up = list(mu)
            up[i - 1] += 1
            if tuple(up) in index:
                c = 1 - q ** (mu_ext[i - 1] - mu_ext[i])
                if i == 1:
                    c *= 1 - ap * q ** (m - mu[0] - 1)
                M[r][index[tuple(up)]] += c
            dn = list(mu)
            dn[i - 1] -= 1
            if tuple(dn) in index:
                c = 1 - q ** (mu_ext[i] - mu_ext[i + 1])
                if i == n:
                    c *= 1 - am * q ** (mu[-1] - 1)
                M[r][index[tuple(dn)]] += c
    return basis, M


def toda_q1_matrix(n, m, pp, qp, pm, qm):
    ap, bp = pp * qp, pp + qp
    am, bm = pm * qm, pm + qm
    basis = partitions_box(n, m)
    index = {mu: r for r, mu in enumerate(basis)}
    size = len(basis)
    M = [[mp.mpf(0)] * size for _ in range(size)]
    for r, mu in enumerate(basis):
        mu_ext = [m] + list(mu) + [0]
        M[r][r] = bp * (m - mu[0]) + bm * mu[-1]
        for i in range(1, n + 1):
            up = list(mu)
            up[i - 1] += 1
            if tuple(up) in index:
                c = mp.mpf(mu_ext[i - 1] - mu_ext[i])
                if i == 1:
                    c *= 1 - ap
                M[r][index[tuple(up)]] += c
            dn = list(mu)
            dn[i - 1] -= 1
            if tuple(dn) in index:
                c = mp.mpf(mu_ext[i] - mu_ext[i + 1])
                if i == n:
                    c *= 1 - am
                M[r][index[tuple(dn)]] += c
    return basis, M


def c_function(xis, q, ap, bp):
    m = len(xis)
    val = mp.mpc(1)
    for j in range(m):
        e1 = mp.e ** (-1j * xis[j])
        e2 = mp.e ** (-2j * xis[j])
        val *= (1 - bp * e1 + ap * e2) / (1 - e2)
    for j in range(m):
        for k in range(j + 1, m):
            d = mp.e ** (-1j * (xis[j] - xis[k]))
            s = mp.e ** (-1j * (xis[j] + xis[k]))
            val *= (1 - q * d) / (1 - d) * (1 - q * s) / (1 - s)
    return val


def hl_polynomial(lam, xis, q, ap, bp):
    m = len(xis)
    total = mp.mpc(0)
    for perm in itertools.permutations(range(m)):
        for signs in itertools.product([1, -1], repeat=m):
            args = [signs[j] * xis[perm[j]] for j in range(m)]
            phase = sum(args[j] * lam[j] for j in range(m))
            total += c_function(args, q, ap, bp) * mp.e ** (1j * phase)
    return total


def v_smooth(a, z):
    return z + 2 * mp.atan(a * mp.sin(z) / (1 - a * mp.cos(z)))


def v_quad(a, z):
    return mp.quad(lambda x: (1 - a**2) / (1 - 2 * a * mp.cos(x) + a**2), [0, z])


def big_w(a, z):
    return mp.quad(lambda x: v_smooth(a, x), [0, z])


def morse_value(xi, n, m, kappa, q, roots4):
    # 0-based j, so the quantum number m+1-(j+1)+kappa_j reads m-j+kappa_j.
    val = mp.mpf(0)
    for j in range(m):
        for k in range(j + 1, m):
            val += big_w(q, xi[j] + xi[k]) + big_w(q, xi[j] - xi[k])
    for j in range(m):
        val += n * xi[j] ** 2 - 2 * mp.pi * (m - j + kappa[j]) * xi[j]
        for a in roots4:
            val += big_w(a, xi[j])
    return val


def morse_grad(xi, n, m, kappa, q, roots4):
    g = []
    for j in range(m):
        gj = 2 * n * xi[j] - 2 * mp.pi * (m - j + kappa[j])
        for a in roots4:
            gj += v_smooth(a, xi[j])
        for k in range(m):
            if k != j:
                gj += v_smooth(q, xi[j] + xi[k]) + v_smooth(q, xi[j] - xi[k])
        g.append(gj)
    return g


def solve_bethe(n, m, kappa, q, roots4):
    x0 = [mp.pi * (m - j + kappa[j]) / (m + n + 1) for j in range(m)]
    f = lambda *xs: morse_grad(list(xs), n, m, kappa, q, roots4)
    sol = mp.findroot(f, x0)
    return [sol[j] for j in range(m)]


def univariate_r(l, theta, ap, bp):
    e1 = mp.e ** (-1j * theta)
    e2 = mp.e ** (-2j * theta)
    t = (1 - bp * e1 + ap * e2) / (1 - e2) * mp.e ** (1j * l * theta)
    return 2 * mp.re(t)


def bs_polynomial(n, theta, pp, qp, pm, qm):
    e1 = mp.e ** (-1j * theta)
    e2 = mp.e ** (-2j * theta)
    num = (1 - pp * e1) * (1 - qp * e1) * (1 - pm * e1) * (1 - qm * e1)
    t = num / (1 - e2) * mp.e ** (1j * (n + 1) * theta)
    return 2 * mp.re(t)


def aw_roots(n, pp, qp, pm, qm):
    roots4 = [pp, qp, pm, qm]
    out = []
    for k in range(n + 1):
        g = lambda t: 2 * n * t + sum(v_smooth(a, t) for a in roots4) - 2 * mp.pi * (k + 1)
        out.append(mp.findroot(g, mp.pi * (k + 1) / (n + 2)))
    return out


def main():
    print("== q_pochhammer ==")
    print("qpoch(0.5,0.5,2) =", fmt(qpoch(mp.mpf("0.5"), mp.mpf("0.5"), 2)))

    print("== toda_weight (n=2,m=2) q=0.3 p=q=0.2 mu=(1,1) ==")
    q = mp.mpf("0.3")
    a = mp.mpf("0.04")
    print("Delta_(1,1) =", fmt(toda_weight((1, 1), 2, 2, q, a, a)))

    print("== toda matrix (1,1) q=0.4 pp=0.3 qp=-0.2 pm=0.25 qm=0.1 ==")
    basis, M = toda_matrix(1, 1, mp.mpf("0.4"), mp.mpf("0.3"), mp.mpf("-0.2"),
                           mp.mpf("0.25"), mp.mpf("0.1"))
    print("basis:", basis)
    for row in M:
        print("  {", ", ".join(fmt(x) for x in row), "},")

    print("== toda matrix (2,2) q=0.3 p=q=0.2 ==")
    basis, M = toda_matrix(2, 2, mp.mpf("0.3"), mp.mpf("0.2"), mp.mpf("0.2"),
                           mp.mpf("0.2"), mp.mpf("0.2"))
    print("basis:", basis)
    for row in M:
        print("  {", ", ".join(fmt(x) for x in row), "},")

    print("== toda q1 matrix (2,2) pp=0.3 qp=0.2 pm=-0.2 qm=0.4 ==")
    basis, M = toda_q1_matrix(2, 2, mp.mpf("0.3"), mp.mpf("0.2"), mp.mpf("-0.2"),
                              mp.mpf("0.4"))
    print("basis:", basis)
    for row in M:
        print("  {", ", ".join(fmt(x) for x in row), "},")

    print("== c_function m=2 xi=(1.1,0.6) q=0.3 ap=0.04 bp=0.4 ==")
    c = c_function([mp.mpf("1.1"), mp.mpf("0.6")], mp.mpf("0.3"), mp.mpf("0.04"), mp.mpf("0.4"))
    print("re =", fmt(mp.re(c)), " im =", fmt(mp.im(c)))

    print("== hl_polynomial lam=(1,0) xi=(1.3,0.55) q=0.3 ap=0.04 bp=0.4 ==")
    r = hl_polynomial((1, 0), [mp.mpf("1.3"), mp.mpf("0.55")], mp.mpf("0.3"),
                      mp.mpf("0.04"), mp.mpf("0.4"))
    print("re =", fmt(mp.re(r)), " im =", fmt(mp.im(r)))

    print("== hl_polynomial lam=(2,1) same point ==")
    r = hl_polynomial((2, 1), [mp.mpf("1.3"), mp.mpf("0.55")], mp.mpf("0.3"),
                      mp.mpf("0.04"), mp.mpf("0.4"))
    print("re =", fmt(mp.re(r)), " im =", fmt(mp.im(r)))

    print("== v_a via quadrature, a=0.55 ==")
    a = mp.mpf("0.55")
    for z in ["2.7", "-4.2"]:
        z = mp.mpf(z)
        print(f"v_a({z}) quad =", fmt(v_quad(a, z)), " smooth =", fmt(v_smooth(a, z)))

    print("== morse value (n=2,m=2) kappa=(1,0) xi=(1.2,0.7) q=0.4 p=0.3 q=-0.2 ==")
    roots4 = [mp.mpf("0.3"), mp.mpf("-0.2"), mp.mpf("0.3"), mp.mpf("-0.2")]
    V = morse_value([mp.mpf("1.2"), mp.mpf("0.7")], 2, 2, (1, 0), mp.mpf("0.4"), roots4)
    print("V =", fmt(V))

    print("== bethe root (n=2,m=2) kappa=(2,1) q=0.4 p±=0.3 q±=-0.2 ==")
    xi = solve_bethe(2, 2, (2, 1), mp.mpf("0.4"), roots4)
    print("xi =", [fmt(x) for x in xi])
    print("V at root =", fmt(morse_value(xi, 2, 2, (2, 1), mp.mpf("0.4"), roots4)))

    print("== univariate R_1(pi/2), ap=0.04 bp=0.4 ==")
    print("R_1 =", fmt(univariate_r(1, mp.pi / 2, mp.mpf("0.04"), mp.mpf("0.4"))))
    print("== univariate R_2(0.9), ap=0.06 bp=0.5 ==")
    print("R_2 =", fmt(univariate_r(2, mp.mpf("0.9"), mp.mpf("0.06"), mp.mpf("0.5"))))

    print("== bs n=1 p+=0.5 theta=pi/2 ==")
    print("bs =", fmt(bs_polynomial(1, mp.pi / 2, mp.mpf("0.5"), mp.mpf(0), mp.mpf(0), mp.mpf(0))))

    print("== aw roots n=2 pp=0.3 qp=-0.2 pm=0.25 qm=0.1 ==")
    roots = aw_roots(2, mp.mpf("0.3"), mp.mpf("-0.2"), mp.mpf("0.25"), mp.mpf("0.1"))
    print("thetas =", [fmt(t) for t in roots])
    for t in roots:
        print("  bs residual:", fmt(bs_polynomial(2, t, mp.mpf("0.3"), mp.mpf("-0.2"),
                                                   mp.mpf("0.25"), mp.mpf("0.1"))))

    print("== jacobi reference: 5x5 symmetric eigenvalues ==")
    A = mp.matrix(5, 5)
    for i in range(5):
        for j in range(5):
            A[i, j] = mp.mpf(1) / (1 + abs(i - j))
        A[i, i] += i
    evals = mp.eigsy(A, eigvals_only=True)
    print("evals =", [fmt(e) for e in evals])


if __name__ == "__main__":
    main()
