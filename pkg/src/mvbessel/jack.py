"""Jack polynomials and the scalar data attached to them.

P_lambda is computed from its definition: the monic, dominance-triangular
eigenfunction of the degree-preserving Sutherland operator, obtained by a
triangular linear solve over the dominance class of lambda.  Hook products,
principal specializations and co-cover data come from explicit products;
the product formulas from the literature are kept as cross-checkable
secondary routes (see *_product functions) because their printed index
ranges disagree with the values forced by the operator actions.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from typing import Mapping

from .errors import DegenerateEigenvalue, PoleError
from .partitions import Partition, dominance_leq, partitions_of, partitions_up_to
from .polyalg import ONE, ZERO, MultiPoly, SymPoly, rat_str
from . import diffops

_CACHE_LOCK = threading.Lock()
_JACK_CACHE: dict[tuple, SymPoly] = {}
_D2_CACHE: dict[tuple, SymPoly] = {}


def eigenvalue_d(lam: Partition, kappa: Fraction, n: int) -> Fraction:
    """sum_i lam_i (lam_i - 1 + 2 kappa (n - i))."""
    kappa = Fraction(kappa)
    total = ZERO
    for i in range(1, lam.length() + 1):
        li = lam.part(i)
        total += li * (li - 1 + 2 * kappa * (n - i))
    return total


def _d2_monomial(mu: Partition, kappa: Fraction, n: int) -> SymPoly:
    key = (mu.parts, Fraction(kappa), n)
    with _CACHE_LOCK:
        cached = _D2_CACHE.get(key)
    if cached is not None:
        return cached
    res = diffops.apply_sutherland_sym(SymPoly(n, {mu: ONE}), 2, kappa)
    with _CACHE_LOCK:
        _D2_CACHE[key] = res
    return res


def jack_in_monomials(lam: Partition, kappa: Fraction, n: int) -> SymPoly:
    """The monic Jack polynomial P_lambda in the m basis, for n variables.

    Triangular solve: P = m_lam + sum u_mu m_mu over mu strictly below lam
    in dominance, determined by the eigen-equation for the k=2 Sutherland
    operator.  Raises DegenerateEigenvalue on an eigenvalue collision.
    """
    kappa = Fraction(kappa)
    if lam.length() > n:
        raise ValueError(f"{lam!r} needs more than {n} variables")
    key = (lam.parts, kappa, n)
    with _CACHE_LOCK:
        cached = _JACK_CACHE.get(key)
    if cached is not None:
        return cached

    d_lam = eigenvalue_d(lam, kappa, n)
    cls = [mu for mu in partitions_of(lam.weight(), n) if dominance_leq(mu, lam)]
    # decreasing graded-lex is a linear extension of dominance (top first)
    cls.sort(key=lambda p: p.parts, reverse=True)
    u: dict[Partition, Fraction] = {lam: ONE}
    actions = {mu: _d2_monomial(mu, kappa, n) for mu in cls}
    for mu in cls[1:]:
        d_mu = eigenvalue_d(mu, kappa, n)
        if d_mu == d_lam:
            raise DegenerateEigenvalue(
                f"d_{mu.parts} = d_{lam.parts} = {d_lam} at kappa={kappa}, n={n}"
            )
        rhs = ZERO
        for nu, c in u.items():
            rhs += c * actions[nu].coeff(mu)
        val = rhs / (d_lam - d_mu)
        if val:
            u[mu] = val
    res = SymPoly(n, u)
    with _CACHE_LOCK:
        _JACK_CACHE[key] = res
    return res


def hook_products(lam: Partition, kappa: Fraction) -> tuple[Fraction, Fraction]:
    """(h_lam, h^lam): the lower and upper hook products of lambda.

    h_lam   = prod over cells (lam_i - j + kappa (lam'_j - i) + 1)
    h^lam   = prod over cells (lam_i - j + kappa (lam'_j - i + 1))
    """
    kappa = Fraction(kappa)
    conj = lam.conjugate()
    lower = upper = ONE
    for i in range(1, lam.length() + 1):
        for j in range(1, lam.part(i) + 1):
            arm = lam.part(i) - j
            leg = conj.part(j) - i
            lower *= arm + kappa * leg + 1
            upper *= arm + kappa * (leg + 1)
    return lower, upper


def principal_spec(lam: Partition, kappa: Fraction, n: int) -> Fraction:
    """P_lambda(1,...,1) via the hook-quotient product formula."""
    kappa = Fraction(kappa)
    if lam.length() > n:
        return ZERO
    if kappa == 0:
        raise PoleError("principal specialization needs kappa != 0")
    alpha = 1 / kappa
    conj = lam.conjugate()
    val = ONE
    for i in range(1, lam.length() + 1):
        for j in range(1, lam.part(i) + 1):
            num = n - (i - 1) + alpha * (j - 1)
            den = conj.part(j) - i + 1 + alpha * (lam.part(i) - j)
            if den == 0:
                raise PoleError(f"hook denominator vanished at cell ({i},{j})")
            val *= num / den
    return val


def psi_prime(lam: Partition, i: int, kappa: Fraction) -> Fraction:
    """Coefficient of P_{lam + e_i} in p_1 * P_lam (the one-box Pieri weight)."""
    kappa = Fraction(kappa)
    if lam.add_box(i) is None:
        raise ValueError(f"adding a box in row {i} of {lam!r} is not a partition")
    val = ONE
    li = lam.part(i)
    for j in range(1, i):
        lj = lam.part(j)
        d1 = kappa * (j - i) + li - lj
        d2 = kappa * (j - i) + li - lj + 1
        if d1 == 0 or d2 == 0:
            raise PoleError("psi' denominator vanished")
        val *= (kappa * (j - i + 1) + li - lj) / d1
        val *= (kappa * (j - i - 1) + li - lj + 1) / d2
    return val


def binomial_cocover(lam: Partition, i: int, kappa: Fraction) -> Fraction:
    """Generalized binomial coefficient binom(lam + e_i, lam).

    Computed as psi' * h_{lam+e_i} / h_lam, the value forced by combining
    the p_1-multiplication and constant-differentiation actions on the
    Jack basis.
    """
    kappa = Fraction(kappa)
    up = lam.add_box(i)
    if up is None:
        raise ValueError(f"adding a box in row {i} of {lam!r} is not a partition")
    h_lam, _ = hook_products(lam, kappa)
    h_up, _ = hook_products(up, kappa)
    return psi_prime(lam, i, kappa) * h_up / h_lam


def binomial_cocover_product(
    lam: Partition, i: int, kappa: Fraction, corrected: bool = True
) -> Fraction:
    """binom(lam + e_i, lam) from the closed product formula.

    With corrected=True the row-count prefactor uses the length of
    lam + e_i and the product runs over rows j <= len(lam + e_i), j != i;
    with corrected=False the formula is evaluated exactly as printed in the
    literature (prefactor uses len(lam), product over all j != i up to n is
    read as j <= len(lam)), which disagrees with the operator-forced values.
    """
    kappa = Fraction(kappa)
    up = lam.add_box(i)
    if up is None:
        raise ValueError(f"adding a box in row {i} of {lam!r} is not a partition")
    ell = up.length() if corrected else lam.length()
    li = lam.part(i)
    val = li + 1 + kappa * (ell - i)
    for j in range(1, ell + 1):
        if j == i:
            continue
        lj = lam.part(j)
        den = li - lj + 1 + kappa * (j - i)
        if den == 0:
            raise PoleError("binomial product denominator vanished")
        val *= (li - lj + 1 + kappa * (j - i - 1)) / den
    return val


def spec_ratio_cocover(lam: Partition, i: int, kappa: Fraction, n: int) -> Fraction:
    """P_{lam+e_i}(1^n) / P_lam(1^n)."""
    up = lam.add_box(i)
    if up is None or up.length() > n:
        raise ValueError(f"row {i} of {lam!r} cannot grow within {n} variables")
    den = principal_spec(lam, kappa, n)
    if den == 0:
        raise PoleError("principal specialization vanished")
    return principal_spec(up, kappa, n) / den


def spec_ratio_product(
    lam: Partition, i: int, kappa: Fraction, n: int, corrected: bool = True
) -> Fraction:
    """P_{lam+e_i}(1^n)/P_lam(1^n) from the closed product formula.

    corrected=True drops the leading kappa factor, replaces len(lam) by
    len(lam + e_i) and restricts both products to rows j <= len(lam + e_i);
    corrected=False follows the printed formula verbatim.
    """
    kappa = Fraction(kappa)
    up = lam.add_box(i)
    if up is None:
        raise ValueError(f"adding a box in row {i} of {lam!r} is not a partition")
    li = lam.part(i)
    if corrected:
        ell = up.length()
        val = ONE
    else:
        ell = lam.length()
        val = kappa
    den0 = li + kappa * (ell - i + 1)
    if den0 == 0:
        raise PoleError("specialization-ratio denominator vanished")
    val *= (li + kappa * (n - i + 1)) / den0
    jmax = ell if corrected else n
    for j in range(1, jmax + 1):
        if j == i:
            continue
        lj = lam.part(j)
        if j < i:
            den = li - lj + 1 + kappa * (j - i - 1)
            if den == 0:
                raise PoleError("specialization-ratio denominator vanished")
            val *= (li - lj + 1 + kappa * (j - i)) / den
        else:
            den = li - lj + kappa * (j - i)
            if den == 0:
                raise PoleError("specialization-ratio denominator vanished")
            val *= (li - lj + kappa * (j - i + 1)) / den
    return val


# -- expansions in the Jack basis ---------------------------------------------


class JackExpansion:
    """A vector of coefficients on the monic Jack basis {P_mu}."""

    __slots__ = ("n", "kappa", "coeffs")

    def __init__(self, n: int, kappa: Fraction, coeffs: Mapping[Partition, Fraction] | None = None):
        self.n = n
        self.kappa = Fraction(kappa)
        self.coeffs: dict[Partition, Fraction] = {}
        if coeffs:
            for lam, c in coeffs.items():
                if lam.length() > n:
                    raise ValueError(f"{lam!r} has more than {n} parts")
                c = Fraction(c)
                if c != 0:
                    self.coeffs[lam] = c

    def _check(self, other: "JackExpansion") -> None:
        if self.n != other.n or self.kappa != other.kappa:
            raise ValueError("mismatched Jack expansion contexts")

    def __add__(self, other: "JackExpansion") -> "JackExpansion":
        self._check(other)
        out = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            s = out.get(lam, ZERO) + c
            if s:
                out[lam] = s
            else:
                out.pop(lam, None)
        r = JackExpansion(self.n, self.kappa)
        r.coeffs = out
        return r

    def __neg__(self) -> "JackExpansion":
        r = JackExpansion(self.n, self.kappa)
        r.coeffs = {lam: -c for lam, c in self.coeffs.items()}
        return r

    def __sub__(self, other: "JackExpansion") -> "JackExpansion":
        return self + (-other)

    def scale(self, c) -> "JackExpansion":
        c = Fraction(c)
        r = JackExpansion(self.n, self.kappa)
        if c:
            r.coeffs = {lam: c * v for lam, v in self.coeffs.items()}
        return r

    def coeff(self, lam: Partition) -> Fraction:
        return self.coeffs.get(lam, ZERO)

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        return max((lam.weight() for lam in self.coeffs), default=0)

    def truncate(self, maxdeg: int) -> "JackExpansion":
        r = JackExpansion(self.n, self.kappa)
        r.coeffs = {lam: c for lam, c in self.coeffs.items() if lam.weight() <= maxdeg}
        return r

    def to_sym(self) -> SymPoly:
        total = SymPoly.zero(self.n)
        for lam, c in self.coeffs.items():
            total = total + jack_in_monomials(lam, self.kappa, self.n).scale(c)
        return total

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, JackExpansion)
            and self.n == other.n
            and self.kappa == other.kappa
            and self.coeffs == other.coeffs
        )

    def sorted_coeffs(self) -> list[tuple[Partition, Fraction]]:
        return sorted(self.coeffs.items(), key=lambda t: (t[0].weight(), t[0].parts))

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        return " + ".join(f"{rat_str(c)}*P{list(lam.parts)}" for lam, c in self.sorted_coeffs())

    def to_json(self) -> dict[str, str]:
        return {
            "[" + ",".join(map(str, lam.parts)) + "]": rat_str(c)
            for lam, c in self.sorted_coeffs()
        }


def sym_to_jack(f: SymPoly, kappa: Fraction) -> JackExpansion:
    """Expand a symmetric polynomial in the monic Jack basis.

    Peels leading monomial coefficients in decreasing graded-lex order,
    which refines dominance, so each subtraction only introduces strictly
    smaller partitions.
    """
    kappa = Fraction(kappa)
    out: dict[Partition, Fraction] = {}
    rest = f
    while not rest.is_zero():
        lam = rest.leading_partition()
        c = rest.coeff(lam)
        out[lam] = c
        rest = rest - jack_in_monomials(lam, kappa, f.n).scale(c)
    return JackExpansion(f.n, kappa, out)


# -- the five basic operator actions ------------------------------------------

BASIC_OPS = ("E0", "E1", "D1", "D2", "MUL_P1")


def apply_basic(opid: str, v: JackExpansion) -> JackExpansion:
    """Action of one of the basic operators on a Jack-basis vector.

    E1 and D2 are diagonal; E0 and D1 remove one box; MUL_P1 adds one box.
    """
    if opid not in BASIC_OPS:
        raise ValueError(f"unknown operator {opid!r}")
    n, kappa = v.n, v.kappa
    out = JackExpansion(n, kappa)
    for lam, c in v.coeffs.items():
        if opid == "E1":
            out = out + JackExpansion(n, kappa, {lam: c * lam.weight()})
        elif opid == "D2":
            out = out + JackExpansion(n, kappa, {lam: c * eigenvalue_d(lam, kappa, n)})
        elif opid == "MUL_P1":
            terms: dict[Partition, Fraction] = {}
            for i in range(1, n + 1):
                up = lam.add_box(i)
                if up is None:
                    continue
                h_lam, _ = hook_products(lam, kappa)
                h_up, _ = hook_products(up, kappa)
                terms[up] = c * binomial_cocover(lam, i, kappa) * h_lam / h_up
            out = out + JackExpansion(n, kappa, terms)
        else:  # E0 or D1: one-box lowering
            terms = {}
            for i in range(1, lam.length() + 1):
                mu = lam.remove_box(i)
                if mu is None:
                    continue
                w = binomial_cocover(mu, i, kappa) * spec_ratio_cocover(mu, i, kappa, n)
                if opid == "D1":
                    w *= lam.part(i) - 1 + kappa * (n - i)
                prev = terms.get(mu, ZERO)
                terms[mu] = prev + c * w
            out = out + JackExpansion(n, kappa, terms)
    return out


# -- generalized Pochhammer symbols and hypergeometric series ------------------


def rising_factorial(alpha: Fraction, m: int) -> Fraction:
    val = ONE
    alpha = Fraction(alpha)
    for t in range(m):
        val *= alpha + t
    return val


def gen_pochhammer(alpha: Fraction, lam: Partition, kappa: Fraction) -> Fraction:
    """prod_i [alpha - kappa (i-1)]_{lam_i} (rising factorials)."""
    alpha, kappa = Fraction(alpha), Fraction(kappa)
    val = ONE
    for i in range(1, lam.length() + 1):
        val *= rising_factorial(alpha - kappa * (i - 1), lam.part(i))
    return val


def hyperg_trunc(
    upper: list,
    lower: list,
    scale: Fraction,
    kappa: Fraction,
    n: int,
    maxdeg: int,
) -> JackExpansion:
    """Truncated hypergeometric series sum over |lam| <= maxdeg of

        prod [a_i]_lam / prod [b_j]_lam * scale^{|lam|} * P_lam / h_lam.

    The scale implements the substitution x -> scale*x, which multiplies the
    degree-|lam| term by scale^{|lam|}.  Raises PoleError when a lower
    parameter Pochhammer vanishes for a contributing partition.
    """
    kappa = Fraction(kappa)
    scale = Fraction(scale)
    upper = [Fraction(u) for u in upper]
    lower = [Fraction(b) for b in lower]
    out: dict[Partition, Fraction] = {}
    for lam in partitions_up_to(maxdeg, n):
        num = ONE
        for u in upper:
            num *= gen_pochhammer(u, lam, kappa)
        den = ONE
        for b in lower:
            den *= gen_pochhammer(b, lam, kappa)
        if den == 0:
            if num == 0:
                raise PoleError(f"indeterminate 0/0 term at {lam!r}")
            raise PoleError(f"lower-parameter Pochhammer vanished at {lam!r}")
        h_lam, _ = hook_products(lam, kappa)
        c = num / den * scale ** lam.weight() / h_lam
        if c:
            out[lam] = c
    return JackExpansion(n, kappa, out)
