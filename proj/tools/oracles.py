# Copyright 2026 The curveframe Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Reference values for the unit tests, computed in 40-digit arithmetic.

Everything here is built from the parametrizations alone: sympy supplies
exact derivatives of the curve in its parameter, mpmath evaluates them and
handles arc-length integrals and the remaining scalar derivatives. Arc-length
rates use d/ds = |c'|^-1 d/dt. Nothing is shared with the C++ implementation.
Run `python3 tools/oracles.py` to reprint the values frozen into
tests/oracle_values.hpp.
"""

import mpmath as mp
import sympy as sp

mp.mp.dps = 40
t = sp.symbols("t", real=True)


def dot(a, b):
    return sum(a[i] * b[i] for i in range(3))


def cross(a, b):
    return mp.matrix([a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]])


def norm(a):
    return mp.sqrt(dot(a, a))


class Curve:
    def __init__(self, expr):
        c = sp.Matrix(expr)
        self.d = [sp.lambdify(t, list(c.diff(t, k)), "mpmath") for k in range(4)]

    def jet(self, at, k):
        return mp.matrix(self.d[k](at))

    def speed(self, at):
        return norm(self.jet(at, 1))

    def kappa(self, at):
        return norm(cross(self.jet(at, 1), self.jet(at, 2))) / self.speed(at) ** 3

    def tau(self, at):
        c12 = cross(self.jet(at, 1), self.jet(at, 2))
        return dot(c12, self.jet(at, 3)) / dot(c12, c12)

    def kappa_s(self, at):
        return mp.diff(self.kappa, at) / self.speed(at)

    def lever(self, at):
        return -self.kappa_s(at) / self.kappa(at) ** 2 / self.tau(at)

    def sigma(self, at):
        return self.tau(at) / self.kappa(at) + mp.diff(self.lever, at) / self.speed(at)

    def center(self, at):
        d1, d2 = self.jet(at, 1), self.jet(at, 2)
        T = d1 / norm(d1)
        B = cross(d1, d2)
        B = B / norm(B)
        return self.jet(at, 0) + cross(B, T) / self.kappa(at) + self.lever(at) * B

    def radius(self, at):
        return mp.sqrt(1 / self.kappa(at) ** 2 + self.lever(at) ** 2)

    def arc(self, a, b):
        return mp.quad(self.speed, [a, b])

    def integral(self, f, a, b):
        return mp.quad(lambda u: f(u) * self.speed(u), [a, b])

    def J(self, p):
        """<alpha - p, alpha_s x alpha_ss> as a function of t."""
        return lambda at: dot(self.jet(at, 0) - p, cross(self.jet(at, 1), self.jet(at, 2))) / self.speed(at) ** 3

    def rate(self, f):
        return lambda at: mp.diff(f, at) / self.speed(at)


def show(name, value):
    if isinstance(value, mp.matrix):
        print(f"{name} = {{{', '.join(mp.nstr(value[i], 17) for i in range(3))}}}")
    else:
        print(f"{name} = {mp.nstr(value, 17)}")


def cubic(t):
    return vec(t, t * t, t ** 3)


def spherical(t):
    center, r = vec(0.3, -0.2, 0.1), mp.mpf(2)
    phi = mp.mpf("1.2") + mp.mpf("0.3") * mp.cos(t) + mp.mpf("0.1") * mp.sin(t)
    lam = t
    return center + r * vec(mp.sin(phi) * mp.cos(lam), mp.sin(phi) * mp.sin(lam), mp.cos(phi))


def main():
    print("# twisted cubic (t, t^2, t^3), t in [0, 1], test point t = 1/2")
    c = Curve([t, t ** 2, t ** 3])
    h = mp.mpf("0.5")
    show("cubic.length", c.arc(0, 1))
    show("cubic.s_half", c.arc(0, h))
    kappa, tau, sigma, center = c.kappa(h), c.tau(h), c.sigma(h), c.center(h)
    show("cubic.kappa", kappa)
    show("cubic.tau", tau)
    show("cubic.kappa_prime", c.kappa_s(h))
    show("cubic.center", center)
    show("cubic.radius", c.radius(h))
    show("cubic.sigma", sigma)
    show("cubic.total_torsion", c.integral(c.tau, 0, 1))
    # J against the osculating sphere at s0, held fixed and moving along the curve.
    frozen = c.J(center)
    moving = lambda at: c.J(c.center(at))(at)
    J0 = frozen(h)
    show("cubic.J", J0)
    show("cubic.J_prime_frozen", c.rate(frozen)(h))
    J1 = c.rate(moving)(h)
    show("cubic.J_prime", J1)
    show("cubic.decomposition", tau - J1 / (1 + J0 ** 2) - kappa * sigma / (1 + J0 ** 2))

    print("# spherical curve on |x - (0.3, -0.2, 0.1)| = 2, t in [0, 2 pi], test point t = 1")
    p = sp.Matrix([sp.Rational(3, 10), sp.Rational(-2, 10), sp.Rational(1, 10)])
    phi = sp.Rational(12, 10) + sp.Rational(3, 10) * sp.cos(t) + sp.Rational(1, 10) * sp.sin(t)
    c = Curve(p + 2 * sp.Matrix([sp.sin(phi) * sp.cos(t), sp.sin(phi) * sp.sin(t), sp.cos(phi)]))
    pm = mp.matrix([mp.mpf(3) / 10, mp.mpf(-2) / 10, mp.mpf(1) / 10])
    one = mp.mpf(1)
    show("sphere.length", c.arc(0, 2 * mp.pi))
    show("sphere.s_one", c.arc(0, one))
    show("sphere.kappa", c.kappa(one))
    show("sphere.tau", c.tau(one))
    J = c.J(pm)
    show("sphere.J", J(one))
    show("sphere.J_prime", c.rate(J)(one))
    show("sphere.J_start", J(0))
    show("sphere.torsion_to_one", c.integral(c.tau, 0, one))
    show("sphere.sigma", c.sigma(one))

    print("# ellipse semi-axes 2 and 1")
    show("ellipse.length", 4 * 2 * mp.ellipe(1 - mp.mpf(1) / 4))


if __name__ == "__main__":
    main()
