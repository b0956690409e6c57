"""Multivariable Bessel polynomials Y_lambda.

Y_lambda is the unique symmetric-polynomial eigenfunction of the Bessel
operator

    D^B = sum_i x_i^2 d_i^2 + sum_i (a x_i + 2) d_i
          + 2 kappa sum_{i != j} x_i^2 / (x_i - x_j) d_i

that is triangular on the monic Jack basis with top coefficient one.  The
coefficients are filled by a one-box-lowering recurrence and cross-checked
by an explicit sum over chains of partitions; rectangular shapes also admit
a terminating hypergeometric form.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DegenerateEigenvalue, PoleError
from .partitions import Partition, partitions_up_to, skew_standard_chains
from .polyalg import ONE, ZERO, SymPoly, rat, rat_str
from . import jack
from .jack import JackExpansion


@dataclass(frozen=True)
class BesselParams:
    """Parameter triple (a, kappa, n) for the Bessel operator."""

    a: Fraction
    kappa: Fraction
    n: int

    def __post_init__(self):
        object.__setattr__(self, "a", rat(self.a))
        object.__setattr__(self, "kappa", rat(self.kappa))
        if self.n < 1:
            raise ValueError("n must be a positive integer")


def rho_vector(p: BesselParams) -> tuple[Fraction, ...]:
    """rho_i = kappa (n - i) + (a - 1)/2, for i = 1..n."""
    return tuple(p.kappa * (p.n - i) + (p.a - 1) / 2 for i in range(1, p.n + 1))


def bessel_eigenvalue(lam: Partition, p: BesselParams) -> Fraction:
    """e_lambda = d_lambda + a |lambda|."""
    if lam.length() > p.n:
        raise ValueError(f"{lam!r} needs more than {p.n} variables")
    return jack.eigenvalue_d(lam, p.kappa, p.n) + p.a * lam.weight()


def sufficient_nondegeneracy(lam: Partition, p: BesselParams) -> bool:
    """a < -2(|lambda| + kappa (n-1)) + 1 forces distinct eigenvalues below lambda."""
    return p.a < -2 * (lam.weight() + p.kappa * (p.n - 1)) + 1


def check_nondegenerate(lam: Partition, p: BesselParams) -> bool:
    """True iff e_mu != e_lambda for every partition mu strictly contained in lambda."""
    e_lam = bessel_eigenvalue(lam, p)
    for mu in partitions_up_to(lam.weight(), p.n):
        if mu != lam and lam.contains(mu) and bessel_eigenvalue(mu, p) == e_lam:
            return False
    return True


class BesselPolynomial:
    """Y_lambda together with its parameters and Jack-basis coefficients."""

    __slots__ = ("lam", "params", "jack_coeffs", "_sym")

    def __init__(self, lam: Partition, params: BesselParams, jack_coeffs: JackExpansion):
        self.lam = lam
        self.params = params
        self.jack_coeffs = jack_coeffs
        self._sym = None

    def eigenvalue(self) -> Fraction:
        return bessel_eigenvalue(self.lam, self.params)

    def to_sym(self) -> SymPoly:
        if self._sym is None:
            self._sym = self.jack_coeffs.to_sym()
        return self._sym

    def coeff(self, mu: Partition) -> Fraction:
        return self.jack_coeffs.coeff(mu)

    def __repr__(self) -> str:
        return f"BesselPolynomial({list(self.lam.parts)}, {self.params}, {self.jack_coeffs!r})"

    def to_json(self) -> dict:
        return {
            "lambda": list(self.lam.parts),
            "a": rat_str(self.params.a),
            "kappa": rat_str(self.params.kappa),
            "n": self.params.n,
            "jack_coeffs": self.jack_coeffs.to_json(),
            "monomial_coeffs": self.to_sym().to_json(),
            "eigenvalue": rat_str(self.eigenvalue()),
        }


def _lower_weight(mu: Partition, i: int, p: BesselParams) -> Fraction:
    # coefficient of the mu-term produced when the operator lowers mu+e_i
    return jack.spec_ratio_cocover(mu, i, p.kappa, p.n) * jack.binomial_cocover(
        mu, i, p.kappa
    )


def bessel_expand(lam: Partition, p: BesselParams) -> BesselPolynomial:
    """Build Y_lambda by the triangular eigenvector recurrence.

    u_{lambda lambda} = 1 and, for mu strictly inside lambda,
        (e_lambda - e_mu) u_{lambda mu}
            = 2 sum_i spec_ratio(mu, i) binom(mu+e_i, mu) u_{lambda, mu+e_i},
    the sum running over rows i with mu + e_i still contained in lambda.
    """
    if lam.length() > p.n:
        raise ValueError(f"{lam!r} needs more than {p.n} variables")
    e_lam = bessel_eigenvalue(lam, p)
    inside = [mu for mu in partitions_up_to(lam.weight(), p.n) if lam.contains(mu)]
    inside.sort(key=lambda q: q.weight(), reverse=True)
    u: dict[Partition, Fraction] = {lam: ONE}
    for mu in inside:
        if mu == lam:
            continue
        e_mu = bessel_eigenvalue(mu, p)
        if e_mu == e_lam:
            raise DegenerateEigenvalue(
                f"e_{mu.parts} = e_{lam.parts} = {e_lam} at a={p.a}, kappa={p.kappa}, n={p.n}"
            )
        rhs = ZERO
        for i in range(1, min(p.n, lam.length()) + 1):
            up = mu.add_box(i)
            if up is None or not lam.contains(up):
                continue
            rhs += _lower_weight(mu, i, p) * u.get(up, ZERO)
        val = 2 * rhs / (e_lam - e_mu)
        if val:
            u[mu] = val
    return BesselPolynomial(lam, p, JackExpansion(p.n, p.kappa, u))


def bessel_coeff_tableau(lam: Partition, mu: Partition, p: BesselParams) -> Fraction:
    """The coefficient u_{lambda mu} as an explicit sum over one-box chains.

    Each chain lam = nu_0 ⊃ nu_1 ⊃ ... ⊃ nu_r = mu contributes

        2^r prod_{i=1}^r [spec_ratio * binom at the step nu_i -> nu_{i-1}]
                         / (a i + d_lambda - d_{nu_i}),

    which is the recurrence above unrolled chain by chain.  Raises
    DegenerateEigenvalue when a chain denominator vanishes.
    """
    if not lam.contains(mu):
        return ZERO
    d_lam = jack.eigenvalue_d(lam, p.kappa, p.n)
    total = ZERO
    for chain in skew_standard_chains(lam, mu):
        term = ONE
        for i in range(1, len(chain)):
            lower = chain[i]
            upper = chain[i - 1]
            row = next(
                r
                for r in range(1, upper.length() + 1)
                if lower.add_box(r) == upper
            )
            den = p.a * i + d_lam - jack.eigenvalue_d(lower, p.kappa, p.n)
            if den == 0:
                raise DegenerateEigenvalue(
                    f"chain denominator vanished at step {i} below {lam.parts}"
                )
            term *= 2 * _lower_weight(lower, row, p) / den
        total += term
    return total


def renormalize(Y: BesselPolynomial) -> BesselPolynomial:
    """The unit-constant-term normalization of Y_lambda.

    Divides by 2^{|lambda|} times the plus-type shifted-factor ratio at
    rho + lambda over rho.
    """
    from .pieri_norms import CoefficientContext, delta_ratio

    ctx = CoefficientContext(Y.params)
    ratio = delta_ratio("+", Y.lam, ctx)
    if ratio == 0:
        raise PoleError(f"normalization ratio vanished for {Y.lam!r}")
    c = Fraction(1, 2 ** Y.lam.weight()) / ratio
    return BesselPolynomial(Y.lam, Y.params, Y.jack_coeffs.scale(c))


def rectangular_2F0(k: int, p: BesselParams) -> BesselPolynomial:
    """Y_{(k^n)} as a terminating 2F0 hypergeometric series.

    Y_{(k^n)} = C * 2F0(-k, beta; x -> -x/2) with beta = k + a - 1 + kappa (n-1)
    and

        C = (-2)^{kn} h_{(k^n)} / ([-k]_{(k^n)} [beta]_{(k^n)}),

    asserted equal to the recurrence construction.  The row-i factor of
    [beta]_{(k^n)} is then the rising factorial of k + a - 1 + kappa (n-i);
    published statements of this identity place the kappa shift with the
    opposite sign, which only coincides with the operator-forced
    coefficients when n = 1.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    lam = Partition((k,) * p.n)
    beta = k + p.a - 1 + p.kappa * (p.n - 1)
    series = jack.hyperg_trunc([-k, beta], [], Fraction(-1, 2), p.kappa, p.n, k * p.n)
    den = jack.gen_pochhammer(-k, lam, p.kappa) * jack.gen_pochhammer(beta, lam, p.kappa)
    if den == 0:
        raise PoleError(f"Pochhammer denominator vanished for k={k}, {p}")
    h_lam, _ = jack.hook_products(lam, p.kappa)
    C = Fraction(-2) ** (k * p.n) * h_lam / den
    result = BesselPolynomial(lam, p, series.scale(C))
    recur = bessel_expand(lam, p)
    if result.jack_coeffs != recur.jack_coeffs:
        raise AssertionError(
            f"hypergeometric and recurrence forms of Y_{lam.parts} disagree"
        )
    return result
