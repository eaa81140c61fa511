"""Independent 40-digit reference implementations used to freeze test values.

Everything here is written directly from the defining products and sums
(no term ratios, no shared code with the package).  Run as a script to
regenerate ``frozen_values.py``.
"""
from __future__ import annotations

import mpmath as mp

DPS = 40
I = mp.inf


def _eps():
    return mp.mpf(10) ** (-mp.mp.dps - 5)


def poch(a, q, n):
    a, q = mp.mpmathify(a), mp.mpmathify(q)
    p = mp.mpc(1)
    if n == I:
        k = 0
        while True:
            t = a * q ** k
            p *= 1 - t
            if abs(t) < _eps():
                return p
            k += 1
    for j in range(n):
        p *= 1 - a * q ** j
    return p


def pochm(ps, q, n):
    r = mp.mpc(1)
    for a in ps:
        r *= poch(a, q, n)
    return r


def phi(num, den, q, z, terms=None):
    """``r+1 phi r`` summed from explicit Pochhammer products."""
    q, z = mp.mpmathify(q), mp.mpmathify(z)
    total, k = mp.mpc(0), 0
    while True:
        t = pochm(num, q, k) / pochm(list(den) + [q], q, k) * z ** k
        total += t
        k += 1
        if terms is not None:
            if k > terms:
                return total
        elif abs(t) < _eps() * max(abs(total), 1) and k > 5:
            return total
        if k > 20000:
            raise RuntimeError("oracle series did not converge")


def W(a, b, c, d, e, f, q, terms=None):
    """Very-well-poised 8phi7 from explicit products, ``sqrt(a)`` pair expanded."""
    a, q = mp.mpmathify(a), mp.mpmathify(q)
    num = [a, b, c, d, e, f]
    den = [q, a * q / b, a * q / c, a * q / d, a * q / e, a * q / f]
    z = a * a * q * q / (b * c * d * e * f)
    total, k = mp.mpc(0), 0
    while True:
        t = pochm(num, q, k) / pochm(den, q, k) * (1 - a * q ** (2 * k)) / (1 - a) * z ** k
        total += t
        k += 1
        if terms is not None:
            if k > terms:
                return total
        elif abs(t) < _eps() * max(abs(total), 1) and k > 5:
            return total
        if k > 20000:
            raise RuntimeError("oracle W did not converge")


def phi10(a, params, q, n):
    """Terminating very-well-poised 10phi9 with ``h = q^-n``."""
    a, q = mp.mpmathify(a), mp.mpmathify(q)
    ps = list(params)
    total = mp.mpc(0)
    for k in range(n + 1):
        t = pochm([a] + ps, q, k) / pochm([q] + [a * q / x for x in ps], q, k)
        total += t * (1 - a * q ** (2 * k)) / (1 - a) * q ** k
    return total


class Family:
    """Recurrence, solutions and spectral quantities for one parameter set."""

    def __init__(self, q, alpha, beta, gamma, delta, epsilon):
        self.q, self.al, self.be, self.ga, self.de, self.ep = (mp.mpmathify(x) for x in
                                                               (q, alpha, beta, gamma, delta, epsilon))
        self.s = self.al * self.be * self.ga * self.de

    def A(self, n):
        q, al, be, ga, de, ep, s = self.q, self.al, self.be, self.ga, self.de, self.ep, self.s
        return ((1 - s * q ** (n - 1) * ep) * (1 - al * be * ep * q ** n) * (1 - al * ga * ep * q ** n)
                * (1 - al * de * ep * q ** n)
                / (2 * al * (1 - s * q ** (2 * n - 1) * ep ** 2) * (1 - s * q ** (2 * n) * ep ** 2)))

    def B(self, n):
        q, al, be, ga, de, ep, s = self.q, self.al, self.be, self.ga, self.de, self.ep, self.s
        return (al * (1 - ep * q ** n) * (1 - be * ga * ep * q ** (n - 1)) * (1 - be * de * ep * q ** (n - 1))
                * (1 - ga * de * ep * q ** (n - 1))
                / (2 * (1 - s * ep ** 2 * q ** (2 * n - 2)) * (1 - s * ep ** 2 * q ** (2 * n - 1))))

    def a(self, n):
        return -self.A(n) - self.B(n) + self.al / 2 + 1 / (2 * self.al)

    def b2(self, n):
        return self.A(n - 1) * self.B(n)

    def poly(self, n, z):
        pm, p = mp.mpc(0), mp.mpc(1)
        for k in range(n):
            pm, p = p, (z - self.a(k)) * p - self.b2(k) * pm
        return p

    def aw_4phi3(self, n, u):
        q, al, be, ga, de, s = self.q, self.al, self.be, self.ga, self.de, self.s
        num = [q ** (-n), s * q ** (n - 1), al * u, al / u]
        den = [al * be, al * ga, al * de]
        tot = phi(num, den, q, q, terms=n)
        return (pochm([al * be, al * ga, al * de], q, n) * poch(s / q, q, n)
                / ((2 * al) ** n * poch(s / q, q, 2 * n)) * tot)

    def aw_symmetric(self, n, u):
        q, al, be, ga, de, s = self.q, self.al, self.be, self.ga, self.de, self.s
        return ((2 * u) ** (-n) * pochm([al * u, be * u, ga * u, de * u, s / q], q, n)
                / (poch(s / q, q, 2 * n) * poch(u * u, q, n))
                * W(q ** (-n) / u ** 2, q ** (-n), al / u, be / u, ga / u, de / u, q, terms=n))

    # -- the six solutions ------------------------------------------------
    def X1(self, n, u):
        q, al, be, ga, de, ep, s = self.q, self.al, self.be, self.ga, self.de, self.ep, self.s
        pre = ((u / 2) ** n * poch(s * u * ep * q ** n / de, q, I) * poch(s * ep ** 2 * q ** (2 * n - 1), q, I)
               / (poch(s * ep * q ** (n - 1), q, I) * poch(de * ep * q ** n / u, q, I)
                  * pochm([al * be * ep * q ** n, al * ga * ep * q ** n, be * ga * ep * q ** n], q, I)))
        return pre * W(al * be * ga * u / q, q ** (-n) / ep, ep * s * q ** (n - 1), al * u, be * u, ga * u, q)

    def X2(self, n, u):
        q, al, be, ga, de, ep, s = self.q, self.al, self.be, self.ga, self.de, self.ep, self.s
        pre = ((u / 2) ** n * poch(s * ep ** 2 * q ** (2 * n - 1), q, I) * poch(ep * de * u * q ** (n + 1), q, I)
               / (poch(ep * q ** (n + 1), q, I)
                  * pochm([be * de * ep * q ** n, ga * de * ep * q ** n, al * de * ep * q ** n], q, I)
                  * poch(s * ep / (de * u) * q ** (n - 1), q, I)))
        return pre * W(q * q * u / (al * be * ga), ep * q ** (n + 1), q ** (-n + 2) / (ep * s),
                       q * u / al, q * u / be, q * u / ga, q)

    def _pairs(self, n):
        q, al, be, ga, de, ep = self.q, self.al, self.be, self.ga, self.de, self.ep
        return [x * y * ep * q ** n for x, y in ((al, be), (al, ga), (al, de), (be, ga), (be, de), (ga, de))]

    def X3(self, n, u):
        q, al, be, ga, de, ep, s = self.q, self.al, self.be, self.ga, self.de, self.ep, self.s
        pre = ((2 * u) ** (-n) * poch(s * ep ** 2 * q ** (2 * n), q, I) * poch(s * ep ** 2 * q ** (2 * n - 1), q, I)
               * poch(be * ga * de * ep / u * q ** n, q, I)
               * pochm([ep * x * q ** (n + 1) / u for x in (be, ga, de)], q, I)
               / (poch(ep * q ** (n + 1), q, I) * poch(ep * s * q ** (n - 1), q, I) * pochm(self._pairs(n), q, I)
                  * poch(be * ga * de * ep ** 2 / u * q ** (2 * n + 1), q, I)))
        return pre * W(be * ga * de * ep ** 2 / u * q ** (2 * n), q / (al * u), ep * q ** (n + 1),
                       be * de * ep * q ** n, ga * de * ep * q ** n, be * ga * ep * q ** n, q)

    def X4(self, n, u):
        q, al, be, ga, de, ep, s = self.q, self.al, self.be, self.ga, self.de, self.ep, self.s
        pre = ((2 * u) ** (-n) * poch(ep ** 2 * s * q ** (2 * n - 1), q, I)
               * pochm([x * ep / u * q ** (n + 1) for x in (al, be, ga, de)], q, I)
               / (poch(ep * q ** (n + 1), q, I) * poch(q ** (n + 2) * ep / u ** 2, q, I) * pochm(self._pairs(n), q, I)))
        return pre * W(q ** (n + 1) * ep / u ** 2, ep * q ** (n + 1), q / (al * u), q / (be * u), q / (ga * u),
                       q / (de * u), q)

    def X5(self, n, u):
        q, al, be, ga, de, ep, s = self.q, self.al, self.be, self.ga, self.de, self.ep, self.s
        pre = ((2 * u) ** (-n) * poch(s * q ** (2 * n - 1) * ep ** 2, q, I) * poch(u * u * ep * q ** n, q, I)
               / (poch(s * q ** (n - 1) * ep, q, I) * pochm([x * u * ep * q ** n for x in (al, be, ga, de)], q, I)))
        return pre * W(q ** (-n) / (ep * u * u), q ** (-n) / ep, al / u, be / u, ga / u, de / u, q)

    def X6(self, n, u):
        q, al, be, ga, de, ep, s = self.q, self.al, self.be, self.ga, self.de, self.ep, self.s
        pre = ((2 * u) ** (-n) * poch(s * ep ** 2 * q ** (2 * n - 1), q, I)
               * pochm([s * ep * q ** n / (x * u) for x in (al, be, ga, de)], q, I)
               / (poch(ep * s * q ** (n - 1), q, I) * poch(s * ep * q ** n / u ** 2, q, I) * pochm(self._pairs(n), q, I)))
        return pre * W(s * ep * q ** (n - 1) / u ** 2, ep * s * q ** (n - 1), al / u, be / u, ga / u, de / u, q)

    def solution(self, k, n, u):
        return getattr(self, f"X{k}")(n, u)

    # -- continued fraction and closed forms --------------------------------
    def cf_backward(self, z, depth=600):
        t = z - self.a(depth)
        for n in range(depth - 1, 0, -1):
            t = z - self.a(n) - self.b2(n + 1) / t
        return z - self.a(0) - self.b2(1) / t

    def inv_cf_33(self, u):
        q, al, be, ga, de, ep, s = self.q, self.al, self.be, self.ga, self.de, self.ep, self.s
        pre = (2 / u * (1 - ep * q / u ** 2) * (1 - s * ep ** 2 / q ** 2) * (1 - s * ep ** 2 / q)
               / ((1 - al * ep / u) * (1 - be * ep / u) * (1 - ga * ep / u) * (1 - de * ep / u) * (1 - s * ep / q ** 2)))
        return (pre * W(q * ep / u ** 2, q * ep, q / (al * u), q / (be * u), q / (ga * u), q / (de * u), q)
                / W(ep / u ** 2, ep, q / (al * u), q / (be * u), q / (ga * u), q / (de * u), q))

    def inv_cf_34(self, u):
        q, al, be, ga, de, ep, s = self.q, self.al, self.be, self.ga, self.de, self.ep, self.s
        pre = (2 / u * (1 - s * ep ** 2 / q ** 2) * (1 - s * ep ** 2 / q) * (1 - s * ep / (u * u * q))
               / ((1 - ep) * (1 - s * ep / (al * u * q)) * (1 - s * ep / (be * u * q)) * (1 - s * ep / (ga * u * q))
                  * (1 - s * ep / (de * u * q))))
        return (pre * W(ep * s / (u * u * q), ep * s / q, al / u, be / u, ga / u, de / u, q)
                / W(s * ep / (u * u * q * q), ep * s / q ** 2, al / u, be / u, ga / u, de / u, q))

    # -- spectral ---------------------------------------------------------
    def wronskian_closed(self, u):
        q, al, be, ga, de, ep, s = self.q, self.al, self.be, self.ga, self.de, self.ep, self.s
        return (2 * (u - 1 / u) * poch(s * ep ** 2 / q ** 3, q, I) * poch(s * ep ** 2 / q ** 2, q, I)
                / pochm([al * be * ep / q, al * ga * ep / q, al * de * ep / q, be * ga * ep / q, be * de * ep / q,
                         ga * de * ep / q, s * ep / q ** 2, ep], q, I))

    def weight(self, x):
        q, al, be, ga, de, ep, s = self.q, self.al, self.be, self.ga, self.de, self.ep, self.s
        x = mp.mpf(x)
        u = mp.exp(1j * mp.acos(x))
        pre = 2 * mp.sqrt(1 - x * x) / mp.pi * (1 - s * ep ** 2 / q) * (1 - s * ep ** 2 / q ** 2) ** 2 / (1 - s * ep / q ** 2)
        num = pochm([ep * q / u ** 2, ep * q * u ** 2, al * be * ep, al * ga * ep, al * de * ep, be * ga * ep,
                     be * de * ep, ga * de * ep, ep * q], q, I)
        den = pochm([al * ep / u, al * ep * u, be * ep / u, be * ep * u, ga * ep / u, ga * ep * u, de * ep / u,
                     de * ep * u, s * ep / q ** 2], q, I)
        w = W(ep / u ** 2, q / (al * u), q / (be * u), q / (ga * u), q / (de * u), ep, q)
        return mp.re(pre * num / den / abs(w) ** 2)

    def classical_weight(self, x):
        q, al, be, ga, de, s = self.q, self.al, self.be, self.ga, self.de, self.s
        x = mp.mpf(x)
        u = mp.exp(1j * mp.acos(x))
        num = pochm([u * u, u ** -2, q, al * be, al * ga, al * de, be * ga, be * de, ga * de], q, I)
        den = pochm([al * u, al / u, be * u, be / u, ga * u, ga / u, de * u, de / u, s], q, I)
        return mp.re(num / den / (2 * mp.pi * mp.sqrt(1 - x * x)))

    def G(self, u):
        q, al, be, ga, de, ep, s = self.q, self.al, self.be, self.ga, self.de, self.ep, self.s
        return (1 / u * poch(ep * q / u ** 2, q, I) * pochm([s * ep / (x * u) for x in (al, be, ga, de)], q, I)
                / (poch(s * ep / u ** 2, q, I) * pochm([x * ep / u for x in (al, be, ga, de)], q, I))
                * W(s * ep / (u * u * q), s * ep / q, al / u, be / u, ga / u, de / u, q)
                * W(ep * u * u, ep, q * u / al, q * u / be, q * u / ga, q * u / de, q))

    def dougall_sides(self, u):
        q, al, be, ga, de, ep, s = self.q, self.al, self.be, self.ga, self.de, self.ep, self.s
        lhs = self.G(u) - self.G(1 / u)
        rhs = ((1 / u - u) * (1 - s * ep ** 2 / q ** 2) / (1 - s * ep / q ** 2)
               * pochm(self._pairs(0) + [ep * q / u ** 2, ep * q * u ** 2], q, I)
               / pochm([x * ep * v for x in (al, be, ga, de) for v in (1 / u, u)], q, I))
        return lhs, rhs


def _c(x):
    x = mp.mpc(x)
    return complex(x)


def freeze():
    """Compute the reference table written to ``frozen_values.py``."""
    mp.mp.dps = DPS
    out = {}
    # q-Pochhammer
    out["qpoch"] = [((a, q, n), _c(poch(a, q, I if n is None else n))) for a, q, n in [
        (0.3, 0.5, 4), (0.3, 0.5, None), ((0.2 + 0.3j), 0.6, 7), ((0.2 + 0.3j), (0.5 - 0.2j), None),
        (2.0, 0.5, None), (-0.9, 0.9, None)]]
    # series
    out["phi"] = [((num, den, q, z), _c(phi(num, den, q, z))) for num, den, q, z in [
        ((0.2, 0.3), (0.4,), 0.5, 0.25),
        ((0.1, 0.2), (0.3,), 0.5, 0.5),
        ((0.3 + 0.1j, 0.5, -0.2), (0.4, 0.7j), 0.6, 0.8),
        ((0.5 ** -3, 0.2, 0.3), (0.4, 0.7), 0.5, 0.5)]]
    out["W"] = [((a, b, c, d, e, f, q), _c(W(a, b, c, d, e, f, q))) for a, b, c, d, e, f, q in [
        (0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.5),
        (0.2 + 0.1j, 0.3, -0.4, 0.5j, 0.6, 0.7, 0.4),
        (0.5, 0.5 ** -4, 0.3, 0.4, 0.6, 0.7, 0.5)]]
    # family evaluations
    fam_sets = {
        "base": (0.5, 0.3, 0.25, 0.2, 0.15, 0.5),
        "real": (0.5, 0.4, 0.4, 0.4, 0.4, 0.5),
        "complex": (0.5, 0.3 + 0.1j, 0.25, 0.2 - 0.05j, 0.15, 0.37 + 0.1j),
        "classical": (0.5, 0.3 + 0.1j, 0.25, 0.2 - 0.05j, 0.15, 1.0),
    }
    out["families"] = fam_sets
    u0 = mp.mpc("1.7", "0.4")
    z0 = (u0 + 1 / u0) / 2
    out["u0"] = _c(u0)
    for key, ps in fam_sets.items():
        F = Family(*ps)
        out[f"coeff_{key}"] = [(n, _c(F.A(n)), _c(F.B(n)), _c(F.a(n)), _c(F.b2(n))) for n in range(0, 6)]
        out[f"poly_{key}"] = [(n, _c(F.poly(n, z0))) for n in range(0, 9)]
    F = Family(*fam_sets["complex"])
    out["solutions_complex"] = [(k, n, _c(F.solution(k, n, u0))) for k in (2, 3, 4, 6) for n in (-1, 0, 3)]
    out["cf_complex"] = _c(F.cf_backward(z0))
    out["inv_cf_33_complex"] = _c(F.inv_cf_33(u0))
    out["wronskian_complex"] = _c(F.wronskian_closed(u0))
    F = Family(*fam_sets["classical"])
    out["aw_classical"] = [(n, _c(F.aw_4phi3(n, u0))) for n in range(0, 7)]
    F = Family(*fam_sets["real"])
    out["weight_real"] = [(x, float(F.weight(x))) for x in (-0.9, -0.5, 0.0, 0.25, 0.7)]
    F = Family(0.5, 0.3, 0.25, -0.2, 0.15, 1.0)
    out["classical_weight"] = [(x, float(F.classical_weight(x))) for x in (-0.5, 0.25)]
    out["phi10"] = [((a, ps, q, n), _c(phi10(a, ps, q, n))) for a, ps, q, n in [
        (0.2, (0.3, 0.4 + 0.1j, 0.5, 0.6, -0.3, 0.7, 0.5 ** -3), 0.5, 3)]]
    F = Family(*fam_sets["complex"])
    lhs, rhs = F.dougall_sides(mp.exp(0.7j))
    out["dougall_complex"] = (_c(lhs), _c(rhs))
    return out


if __name__ == "__main__":
    import pprint
    import pathlib

    table = freeze()
    path = pathlib.Path(__file__).with_name("frozen_values.py")
    path.write_text('"""Reference values frozen from ``oracles.py`` at 40 digits (regenerate by running it)."""\n\n'
                    + "FROZEN = " + pprint.pformat(table, width=110) + "\n")
    print(f"wrote {path}")
