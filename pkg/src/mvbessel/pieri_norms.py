"""Pieri-type recurrences and norm formulas for the Bessel family.

Everything here is built from two scalar coefficient functions,

    v(z) = (kappa + z)/z,    w(z) = ((a-1)/2 + z) / (2z(2z+1)),

and from ratios of the product functions Delta_+/Delta_- whose Gamma
quotients collapse to finite rational products at integer shifts via the
difference equations

    d_{v,+}(z+1) =  v(z)   d_{v,+}(z),   d_{v,-}(z+1) =  v(-z-1) d_{v,-}(z),
    d_{w,+}(z+1) =  w(z)   d_{w,+}(z),   d_{w,-}(z+1) = -w(-z-1) d_{w,-}(z).

Absolute Gamma values never materialize; the lone transcendental scale
2^{(a-1)n} Gamma(1-a)^n of the norm formulas is carried implicitly.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import factorial

from .errors import ConvergenceError, PoleError
from .partitions import Partition
from .polyalg import ONE, ZERO, RatT, SymPoly, elementary
from .bessel import BesselParams, rho_vector
from .jack import rising_factorial


def falling_factorial(alpha: Fraction, m: int) -> Fraction:
    val = ONE
    alpha = Fraction(alpha)
    for t in range(m):
        val *= alpha - t
    return val


class CoefficientContext:
    """Bessel parameters plus the rho vector and the shift constants s_+ = 0, s_- = 1."""

    __slots__ = ("params", "rho", "s_plus", "s_minus")

    def __init__(self, params: BesselParams):
        self.params = params
        self.rho = rho_vector(params)
        self.s_plus = 0
        self.s_minus = 1

    def __repr__(self) -> str:
        return f"CoefficientContext({self.params})"


def v_hat(z, kappa):
    """(kappa + z)/z; arguments may be Fractions or RatT perturbations."""
    if z == 0:
        raise PoleError("v(z) has a pole at z = 0")
    return (kappa + z) / z


def w_hat(z, a):
    """((a-1)/2 + z)/(2z(2z+1)); arguments may be Fractions or RatT."""
    if z == 0 or z == Fraction(-1, 2):
        raise PoleError("w(z) has a pole at z in {0, -1/2}")
    return ((a - 1) / 2 + z) / (2 * z * (2 * z + 1))


def _v_pair(u: Fraction, kappa: Fraction, reflected: bool) -> Fraction:
    """v(u) v(u+1) (reflected=False) or v(u) v(-u-1) (reflected=True).

    Computed as a single rational expression: the only genuine poles are at
    u in {0, -1}; at u = -kappa a zero of one factor cancels a pole of the
    other, which factor-by-factor evaluation would miss.
    """
    if u == 0 or u == -1:
        raise PoleError("paired v-factor has a pole at u in {0, -1}")
    second = (kappa - u - 1) if reflected else (kappa + u + 1)
    den = -u * (u + 1) if reflected else u * (u + 1)
    return (kappa + u) * second / den


def _step_ratio(step, z0: Fraction, m: int) -> Fraction:
    # d(z0 + m)/d(z0) for integer m, where d(z+1) = step(z) d(z)
    val = ONE
    if m >= 0:
        for t in range(m):
            val *= step(z0 + t)
    else:
        for t in range(1, -m + 1):
            s = step(z0 - t)
            if s == 0:
                raise PoleError("vanishing factor in a downward Gamma shift")
            val /= s
    return val


def delta_shift_ratio(
    sign: str, z: tuple, m: tuple, ctx: CoefficientContext
) -> Fraction:
    """Delta_sign(z + m)/Delta_sign(z) for an integer shift vector m."""
    a, kappa = ctx.params.a, ctx.params.kappa
    n = ctx.params.n
    if sign == "+":
        v_step = lambda u: v_hat(u, kappa)
        w_step = lambda u: w_hat(u, a)
    elif sign == "-":
        v_step = lambda u: v_hat(-u - 1, kappa)
        w_step = lambda u: -w_hat(-u - 1, a)
    else:
        raise ValueError("sign must be '+' or '-'")
    val = ONE
    for i in range(n):
        for j in range(i + 1, n):
            val *= _step_ratio(v_step, z[i] - z[j], m[i] - m[j])
            val *= _step_ratio(v_step, z[i] + z[j], m[i] + m[j])
        val *= _step_ratio(w_step, z[i], m[i])
    return val


def delta_ratio(sign: str, lam: Partition, ctx: CoefficientContext) -> Fraction:
    """Delta_sign(rho + lambda)/Delta_sign(rho)."""
    n = ctx.params.n
    if lam.length() > n:
        raise ValueError(f"{lam!r} has more than {n} parts")
    m = tuple(lam.part(i) for i in range(1, n + 1))
    return delta_shift_ratio(sign, ctx.rho, m, ctx)


def E_hat_r(r: int, n: int) -> SymPoly:
    """((-1)^{r+1}/2^r) e_r, the normalized elementary symmetric polynomial."""
    if not 1 <= r <= n:
        raise ValueError(f"need 1 <= r <= n, got r={r}, n={n}")
    return elementary(r, n).scale(Fraction((-1) ** (r + 1), 2**r))


def _V_general(eps, I, J, z: tuple, a, kappa):
    I = tuple(I)
    J = tuple(J)
    if set(I) & set(J):
        raise ValueError("I and J must be disjoint")
    val = ONE
    for i in I:
        val *= w_hat(eps[i] * z[i - 1], a)
    for i, i2 in itertools.combinations(I, 2):
        u = eps[i] * z[i - 1] + eps[i2] * z[i2 - 1]
        val *= _v_pair(u, kappa, reflected=False)
    for i in I:
        for j in J:
            val *= v_hat(eps[i] * z[i - 1] + z[j - 1], kappa)
            val *= v_hat(eps[i] * z[i - 1] - z[j - 1], kappa)
    return val


def V_coeff(eps, I, J, z: tuple, ctx: CoefficientContext) -> Fraction:
    """The raising coefficient V_{eps I, J}(z).

    eps maps each index of I to +1 or -1; I and J are disjoint 1-based
    index sets.
    """
    return _V_general(eps, I, J, z, ctx.params.a, ctx.params.kappa)


def _U_general(J, p: int, z: tuple, a, kappa):
    J = tuple(J)
    if not 0 <= p <= len(J):
        raise ValueError(f"need 0 <= p <= |J|, got p={p}, |J|={len(J)}")
    total = ZERO
    for K in itertools.combinations(J, p):
        rest = tuple(j for j in J if j not in K)
        for signs in itertools.product((1, -1), repeat=p):
            eps = dict(zip(K, signs))
            term = ONE
            for k in K:
                term *= w_hat(eps[k] * z[k - 1], a)
            for k, k2 in itertools.combinations(K, 2):
                u = eps[k] * z[k - 1] + eps[k2] * z[k2 - 1]
                term *= _v_pair(u, kappa, reflected=True)
            for k in K:
                for j in rest:
                    term *= v_hat(eps[k] * z[k - 1] + z[j - 1], kappa)
                    term *= v_hat(eps[k] * z[k - 1] - z[j - 1], kappa)
            total += term
    return (-1) ** p * total


def U_coeff(J, p: int, z: tuple, ctx: CoefficientContext) -> Fraction:
    """The stay coefficient U_{J,p}(z), a signed sum over p-subsets of J."""
    return _U_general(J, p, z, ctx.params.a, ctx.params.kappa)


class PieriExpansion:
    """Expansion of E_hat_r times a renormalized Bessel polynomial."""

    __slots__ = ("r", "lam", "terms")

    def __init__(self, r: int, lam: Partition, terms):
        self.r = r
        self.lam = lam
        # (eps tuple, I tuple) -> (target Partition, coefficient)
        self.terms = dict(terms)

    def by_target(self) -> dict[Partition, Fraction]:
        out: dict[Partition, Fraction] = {}
        for target, c in self.terms.values():
            out[target] = out.get(target, ZERO) + c
        return {t: c for t, c in out.items() if c != 0}

    def __repr__(self) -> str:
        return f"PieriExpansion(r={self.r}, lam={list(self.lam.parts)}, {len(self.terms)} terms)"


def _shift_target(lam: Partition, n: int, I, eps) -> Partition | None:
    parts = [lam.part(i) for i in range(1, n + 1)]
    for i in I:
        parts[i - 1] += eps[i]
    if any(x < 0 for x in parts):
        return None
    if any(parts[i] < parts[i + 1] for i in range(n - 1)):
        return None
    return Partition(tuple(parts))


def pieri_expand(r: int, lam: Partition, ctx: CoefficientContext) -> PieriExpansion:
    """Expand E_hat_r * Ytilde_lambda over targets lam + e_{eps I}, |I| <= r.

    The coefficient of the (eps, I) move is U_{I^c, r-|I|} * V_{eps I, I^c},
    both evaluated at z = rho + lambda; moves leaving the partition lattice
    are omitted (their coefficients vanish identically).

    The coefficients are rational functions of (a, kappa) that can hit
    removable 0/0 cancellations at special rational parameters (for
    instance kappa = 1); they are therefore evaluated generically along the
    perturbed line (a + t, kappa + t) and the value taken at t = 0.  A
    genuine pole raises PoleError.
    """
    n = ctx.params.n
    if not 1 <= r <= n:
        raise ValueError(f"need 1 <= r <= n, got r={r}, n={n}")
    a_t = RatT.linear(ctx.params.a, 1)
    kappa_t = RatT.linear(ctx.params.kappa, 1)
    # rho_i(t) = (kappa+t)(n-i) + (a+t-1)/2, so the slope at index i is n-i+1/2
    z = tuple(
        RatT.linear(ctx.rho[i] + lam.part(i + 1), Fraction(2 * (n - i - 1) + 1, 2))
        for i in range(n)
    )
    terms = {}
    for size in range(r + 1):
        for I in itertools.combinations(range(1, n + 1), size):
            Ic = tuple(j for j in range(1, n + 1) if j not in I)
            for signs in itertools.product((1, -1), repeat=size):
                eps = dict(zip(I, signs))
                target = _shift_target(lam, n, I, eps)
                if target is None:
                    continue
                c = _U_general(Ic, r - size, z, a_t, kappa_t) * _V_general(
                    eps, I, Ic, z, a_t, kappa_t
                )
                try:
                    value = c.at_zero() if isinstance(c, RatT) else Fraction(c)
                except ZeroDivisionError:
                    raise PoleError(
                        f"Pieri coefficient has a genuine pole at move {(signs, I)}"
                    )
                # The U*V data expands (1/2^r) e_r * Ytilde; with E_hat_r
                # carrying the extra (-1)^{r+1} the coefficients pick it up
                # too (verified against the polynomial oracle, which rules
                # out the sign-free transcription at r = 2).
                terms[(signs, I)] = (target, (-1) ** (r + 1) * value)
    return PieriExpansion(r, lam, terms)


def pieri_verify(r: int, lam: Partition, ctx: CoefficientContext) -> bool:
    """Oracle check: multiply out E_hat_r * Ytilde_lambda and re-expand it
    in the renormalized basis by triangular peeling; compare exactly with
    pieri_expand."""
    from . import bessel as _bessel
    from .jack import sym_to_jack

    p = ctx.params
    lhs = E_hat_r(r, p.n) * _bessel.renormalize(_bessel.bessel_expand(lam, p)).to_sym()
    rem = sym_to_jack(lhs, p.kappa)
    expanded: dict[Partition, Fraction] = {}
    while not rem.is_zero():
        mu = max(rem.coeffs, key=lambda q: (q.weight(), q.parts))
        ytil = _bessel.renormalize(_bessel.bessel_expand(mu, p)).jack_coeffs
        c = rem.coeff(mu) / ytil.coeff(mu)
        expanded[mu] = c
        rem = rem - ytil.scale(c)
    return expanded == pieri_expand(r, lam, ctx).by_target()


# -- squared norms -------------------------------------------------------------


def norm_ratio(lam: Partition, ctx: CoefficientContext) -> Fraction:
    """N_lambda / N_(0) = (-4)^{|lambda|} times the product of both Delta ratios."""
    return (
        Fraction(-4) ** lam.weight()
        * delta_ratio("+", lam, ctx)
        * delta_ratio("-", lam, ctx)
    )


def norm_ratio_product(lam: Partition, ctx: CoefficientContext) -> Fraction:
    """N_lambda / N_(0) assembled from the explicit rising/falling factorial
    products (the second, independently evaluated route)."""
    a, kappa = ctx.params.a, ctx.params.kappa
    n = ctx.params.n
    val = Fraction(4) ** lam.weight()
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            d = lam.part(i) - lam.part(j)
            s = lam.part(i) + lam.part(j)
            num = rising_factorial(kappa * (j - i + 1), d) * rising_factorial(
                kappa * (j - i - 1) + 1, d
            )
            den = rising_factorial(kappa * (j - i), d) * rising_factorial(
                kappa * (j - i) + 1, d
            )
            num *= falling_factorial(-a - kappa * (2 * n - i - j + 1) + 1, s)
            num *= falling_factorial(-a - kappa * (2 * n - i - j - 1), s)
            den *= falling_factorial(-a - kappa * (2 * n - i - j) + 1, s)
            den *= falling_factorial(-a - kappa * (2 * n - i - j), s)
            if den == 0:
                raise PoleError("vanishing denominator in the norm product formula")
            val *= num / den
    for i in range(1, n + 1):
        li = lam.part(i)
        num = rising_factorial(kappa * (n - i) + 1, li) * falling_factorial(
            -a - kappa * (n - i) + 1, li
        )
        den = falling_factorial(-a - 2 * kappa * (n - i) + 1, 2 * li) * falling_factorial(
            -a - 2 * kappa * (n - i), 2 * li
        )
        if den == 0:
            raise PoleError("vanishing denominator in the norm product formula")
        val *= num / den
    return val


def norm_n0_reduced(ctx: CoefficientContext) -> Fraction:
    """N_(0) divided by the transcendental scale 2^{(a-1)n} Gamma(1-a)^n.

    Requires kappa to be a non-negative integer so every Gamma quotient is
    a finite rational product:

        N_(0)/scale = 2^{kappa n(n-1)} n!
                      prod_i [Gamma(i kappa)/Gamma(kappa)]
                             [Gamma(1-a-kappa(n+i-2))/Gamma(1-a)].
    """
    a, kappa = ctx.params.a, ctx.params.kappa
    n = ctx.params.n
    if kappa.denominator != 1 or kappa < 0:
        raise ValueError("reduced norms need kappa a non-negative integer")
    k = int(kappa)
    val = Fraction(2) ** (k * n * (n - 1)) * factorial(n)
    for i in range(1, n + 1):
        val *= rising_factorial(kappa, (i - 1) * k)
        for t in range(1, k * (n + i - 2) + 1):
            d = 1 - a - t
            if d == 0:
                raise PoleError("Gamma shift hit a pole in the reduced norm")
            val /= d
    return val


def norm_full_reduced(lam: Partition, ctx: CoefficientContext) -> Fraction:
    """N_lambda divided by 2^{(a-1)n} Gamma(1-a)^n, as an exact rational."""
    p = ctx.params
    if p.a >= -2 * (lam.weight() + p.kappa * (p.n - 1)) + 1:
        raise ConvergenceError(
            f"norm undefined: need a < {-2 * (lam.weight() + p.kappa * (p.n - 1)) + 1}"
        )
    return norm_n0_reduced(ctx) * norm_ratio(lam, ctx)
