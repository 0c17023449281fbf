"""Special-function kernels used by the identity verification harness.

Everything here is pure-Python, double precision, restricted to positive
real arguments, and returns a ValueWithError so downstream consumers can
propagate error budgets.  Covered: sine/cosine integrals Si, Ci, si and
the auxiliary Laplace-transform pair f, g; log-gamma, digamma and
polygamma; generalised harmonic numbers; Hurwitz zeta with analytic
s-derivatives (shared Euler-Maclaurin core); Riemann zeta derivatives;
Bernoulli polynomials (exact rationals); log Barnes G; the real-branch
dilogarithm; the lattice function phi(p/q); and the fundamental
constants with self-contained oracles.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import fsum, log, pi, sin, cos, exp


class DomainError(ValueError):
    """Argument outside the supported (positive real) domain."""


class PoleError(ValueError):
    """Evaluation requested at a pole (e.g. zeta at s = 1)."""


class ConvergenceError(RuntimeError):
    """An iterative scheme failed to reach its tolerance."""


_EPS = 2.220446049250313e-16


@dataclass(frozen=True)
class ValueWithError:
    """A numeric result paired with an absolute-error estimate.

    The bound is a good-faith estimate (truncation plus rounding), not a
    certified interval.  Bounds add through sums/differences and combine
    first-order through products.
    """

    value: float
    err_bound: float

    def __post_init__(self):
        if math.isfinite(self.value) and not (
            math.isfinite(self.err_bound) and self.err_bound >= 0.0
        ):
            raise ValueError("err_bound must be finite and non-negative")

    def __add__(self, other):
        if isinstance(other, ValueWithError):
            return ValueWithError(self.value + other.value,
                                  self.err_bound + other.err_bound)
        return ValueWithError(self.value + other, self.err_bound)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, ValueWithError):
            return ValueWithError(self.value - other.value,
                                  self.err_bound + other.err_bound)
        return ValueWithError(self.value - other, self.err_bound)

    def __rsub__(self, other):
        return ValueWithError(other - self.value, self.err_bound)

    def __mul__(self, other):
        if isinstance(other, ValueWithError):
            err = (abs(self.value) * other.err_bound
                   + abs(other.value) * self.err_bound
                   + self.err_bound * other.err_bound)
            return ValueWithError(self.value * other.value, err)
        return ValueWithError(self.value * other, self.err_bound * abs(other))

    __rmul__ = __mul__

    def __neg__(self):
        return ValueWithError(-self.value, self.err_bound)

    def __truediv__(self, other):
        if isinstance(other, ValueWithError):
            if other.value == 0.0:
                raise ZeroDivisionError("division by zero-valued result")
            v = self.value / other.value
            err = (self.err_bound / abs(other.value)
                   + abs(v) * other.err_bound / abs(other.value))
            return ValueWithError(v, err)
        return ValueWithError(self.value / other, self.err_bound / abs(other))

    @staticmethod
    def exact(v: float) -> "ValueWithError":
        return ValueWithError(v, abs(v) * 2 * _EPS + 1e-300)


def _require(cond: bool, msg: str, exc=DomainError):
    if not cond:
        raise exc(msg)


# ---------------------------------------------------------------------------
# Bernoulli numbers and polynomials (exact rational arithmetic)
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _bernoulli_number(n: int) -> Fraction:
    # Recurrence sum_{k=0}^{n} C(n+1, k) B_k = 0 for n >= 1, B_0 = 1.
    if n == 0:
        return Fraction(1)
    if n == 1:
        return Fraction(-1, 2)
    if n % 2 == 1:
        return Fraction(0)
    acc = Fraction(0)
    for k in range(n):
        acc += math.comb(n + 1, k) * _bernoulli_number(k)
    return -acc / (n + 1)


_BERNOULLI_POLY_MAX = 12


def bernoulli_poly(n: int, x: float) -> float:
    """B_n(x) evaluated from exact rational coefficients."""
    _require(isinstance(n, int) and n >= 0, "degree must be a non-negative integer")
    _require(n <= _BERNOULLI_POLY_MAX,
             f"degree {n} unsupported (max {_BERNOULLI_POLY_MAX})")
    xf = Fraction(x)
    acc = Fraction(0)
    for k in range(n + 1):
        acc += math.comb(n, k) * _bernoulli_number(k) * xf ** (n - k)
    return float(acc)


# ---------------------------------------------------------------------------
# Sine and cosine integrals
# ---------------------------------------------------------------------------

_SICI_SERIES_CUTOFF = 8.0


def _sici_series(x: float):
    # Si(x) = sum (-1)^k x^(2k+1) / ((2k+1)(2k+1)!)
    # Cin(x) = sum (-1)^(k+1) x^(2k) / (2k (2k)!)  [= gamma + log x - Ci(x)]
    x2 = x * x
    si_terms, cin_terms = [], []
    term = x  # x^(2k+1)/(2k+1)!
    peak = abs(x)
    k = 0
    while True:
        si_terms.append(term / (2 * k + 1))
        term_c = -term * x / ((2 * k + 2))  # -x^(2k+2)/(2k+2)!
        cin_terms.append(term_c / (2 * k + 2))
        term = term_c * x / (2 * k + 3)  # next signed x^(2k+3)/(2k+3)!
        k += 1
        t = abs(term)
        peak = max(peak, t)
        if t < 1e-18 * (1.0 + peak):
            break
        if k > 200:
            raise ConvergenceError("Si/Ci Maclaurin series stalled")
    rounding = 8 * _EPS * peak
    si_val = fsum(si_terms)
    cin_val = -fsum(cin_terms)
    return si_val, cin_val, rounding + abs(term)


def _e1_imag_cf(x: float):
    # Modified-Lentz continued fraction for E1(i x), x > 0.
    # E1(ix) = -Ci(x) + i si(x).
    z = complex(0.0, x)
    b = z + 1.0
    tiny = 1e-290
    c = 1.0 / tiny
    d = 1.0 / b
    h = d
    for i in range(1, 200000):
        a = -float(i * i)
        b += 2.0
        d = 1.0 / (a * d + b)
        c = b + a / c
        delta = c * d
        h *= delta
        if abs(delta - 1.0) < 1e-16:
            break
    else:
        raise ConvergenceError("E1 continued fraction did not converge")
    e1 = h * complex(cos(x), -sin(x))
    err = 4 * _EPS * abs(e1) + abs(delta - 1.0) * abs(e1)
    return e1, err


def _sici_raw(x: float):
    """(Si(x), Ci(x), err) for x > 0."""
    if x <= _SICI_SERIES_CUTOFF:
        si_val, cin_val, err = _sici_series(x)
        ci_val = _EULER_GAMMA + log(x) - cin_val
        return si_val, ci_val, err + 2 * _EPS * (abs(log(x)) + 1.0)
    e1, err = _e1_imag_cf(x)
    ci_val = -e1.real
    si_val = e1.imag + pi / 2
    return si_val, ci_val, err + 2 * _EPS


def sin_integral_Si(x: float) -> ValueWithError:
    """Si(x) = integral of sin t / t on [0, x]."""
    _require(math.isfinite(x) and x >= 0, "Si requires finite x >= 0")
    if x == 0.0:
        return ValueWithError(0.0, 0.0)
    si_val, _, err = _sici_raw(x)
    return ValueWithError(si_val, err)


def cos_integral_Ci(x: float) -> ValueWithError:
    """Ci(x) = gamma + log x + integral of (cos t - 1)/t on [0, x]."""
    _require(math.isfinite(x) and x > 0, "Ci requires finite x > 0")
    _, ci_val, err = _sici_raw(x)
    return ValueWithError(ci_val, err)


def si_lower(x: float) -> ValueWithError:
    """si(x) = Si(x) - pi/2; si(0) = -pi/2, si(inf) = 0."""
    s = sin_integral_Si(x)
    return ValueWithError(s.value - pi / 2, s.err_bound + _EPS * pi)


def aux_f(x: float) -> ValueWithError:
    """f(x) = -cos x * si(x) + sin x * Ci(x) = Laplace integral of 1/(1+u^2)."""
    _require(math.isfinite(x) and x > 0, "aux_f requires x > 0")
    si_val, ci_val, err = _sici_raw(x)
    v = -cos(x) * (si_val - pi / 2) + sin(x) * ci_val
    return ValueWithError(v, 2 * err + 4 * _EPS * (abs(si_val) + abs(ci_val) + 2.0))


def aux_g(x: float) -> ValueWithError:
    """g(x) = -cos x * Ci(x) - sin x * si(x) = Laplace integral of u/(1+u^2)."""
    _require(math.isfinite(x) and x > 0, "aux_g requires x > 0")
    si_val, ci_val, err = _sici_raw(x)
    v = -cos(x) * ci_val - sin(x) * (si_val - pi / 2)
    return ValueWithError(v, 2 * err + 4 * _EPS * (abs(si_val) + abs(ci_val) + 2.0))


# ---------------------------------------------------------------------------
# Log-gamma family (shift-and-Stirling)
# ---------------------------------------------------------------------------

_STIRLING_SHIFT = 10.0
_STIRLING_COEFFS = [
    float(_bernoulli_number(2 * j) / ((2 * j) * (2 * j - 1)))
    for j in range(1, 9)
]


def _log_gamma_stirling(x: float):
    # x >= _STIRLING_SHIFT
    v = (x - 0.5) * log(x) - x + 0.5 * _LOG_TWO_PI
    inv2 = 1.0 / (x * x)
    p = 1.0 / x
    corr = []
    for c in _STIRLING_COEFFS:
        corr.append(c * p)
        p *= inv2
    last = abs(corr[-1])
    return v + fsum(corr), last + 4 * _EPS * (abs(v) + 1.0)


def log_gamma(x: float) -> ValueWithError:
    """log Gamma(x) for x > 0."""
    _require(math.isfinite(x) and x > 0, "log_gamma requires finite x > 0")
    shift_terms = []
    y = x
    while y < _STIRLING_SHIFT:
        shift_terms.append(log(y))
        y += 1.0
    v, err = _log_gamma_stirling(y)
    if shift_terms:
        s = fsum(shift_terms)
        v -= s
        err += 4 * _EPS * (abs(s) + abs(v))
    return ValueWithError(v, err)


def digamma(x: float) -> ValueWithError:
    """psi(x) = d/dx log Gamma(x) for x > 0."""
    _require(math.isfinite(x) and x > 0, "digamma requires finite x > 0")
    shift_terms = []
    y = x
    while y < _STIRLING_SHIFT:
        shift_terms.append(1.0 / y)
        y += 1.0
    inv = 1.0 / y
    inv2 = inv * inv
    v = log(y) - 0.5 * inv
    p = inv2
    corr = []
    for j in range(1, 9):
        corr.append(-float(_bernoulli_number(2 * j)) / (2 * j) * p)
        p *= inv2
    v += fsum(corr)
    err = abs(corr[-1]) + 4 * _EPS * (abs(v) + 1.0)
    if shift_terms:
        s = fsum(shift_terms)
        v -= s
        err += 4 * _EPS * abs(s)
    return ValueWithError(v, err)


def polygamma(m: int, x: float) -> ValueWithError:
    """psi^(m)(x) for m in {1, 2, 3} and x > 0."""
    _require(isinstance(m, int) and 1 <= m <= 3, "polygamma order must be 1..3")
    _require(math.isfinite(x) and x > 0, "polygamma requires finite x > 0")
    shift_terms = []
    y = x
    while y < _STIRLING_SHIFT:
        shift_terms.append(y ** (-(m + 1)))
        y += 1.0
    # (-1)^(m-1) [ (m-1)!/y^m + m!/(2 y^(m+1)) + sum B_2j (2j+m-1)!/((2j)! y^(2j+m)) ]
    terms = [math.factorial(m - 1) * y ** (-m),
             math.factorial(m) * 0.5 * y ** (-(m + 1))]
    for j in range(1, 9):
        terms.append(float(_bernoulli_number(2 * j))
                     * math.factorial(2 * j + m - 1) / math.factorial(2 * j)
                     * y ** (-(2 * j + m)))
    err = abs(terms[-1]) + 4 * _EPS * sum(abs(t) for t in terms)
    sign = 1.0 if (m - 1) % 2 == 0 else -1.0
    v = sign * fsum(terms)
    if shift_terms:
        # recurrence: psi^(m)(x) = psi^(m)(x+n) + (-1)^(m+1) m! sum (x+k)^(-m-1)
        s = fsum(shift_terms)
        rec_sign = 1.0 if (m + 1) % 2 == 0 else -1.0
        v += rec_sign * math.factorial(m) * s
        err += 4 * _EPS * math.factorial(m) * abs(s)
    return ValueWithError(v, err)


def harmonic(n: int, m: int = 1, a: float = 1.0) -> float:
    """Generalised harmonic number H_n^(m)(a) = sum_{j=0}^{n-1} (a+j)^(-m).

    Summed smallest-term-first; the plain H_n is harmonic(n, 1, 1).
    """
    _require(isinstance(n, int) and n >= 0, "harmonic requires integer n >= 0")
    _require(isinstance(m, int) and m >= 1, "harmonic requires integer m >= 1")
    _require(a > 0, "harmonic requires a > 0")
    return fsum((a + j) ** (-m) for j in range(n - 1, -1, -1))


# ---------------------------------------------------------------------------
# Euler-Maclaurin zeta core: (zeta, d/ds zeta, d2/ds2 zeta)(s, a)
# ---------------------------------------------------------------------------

_ZETA_EM_JMAX = 10


def _zeta_em_head_length(s: float) -> int:
    # For s well above 1 a long head costs nothing and buys accuracy; for
    # negative s the head terms grow like (n+a)^|s| and cancel against the
    # tail integral, so a short head limits the rounding damage.
    if s >= 1.5:
        return 36
    if s >= -3.5:
        return 12
    return 8


def _zeta_em_triple(s: float, a: float, n_head: int | None = None,
                    jmax: int = _ZETA_EM_JMAX):
    """Hurwitz zeta(s, a) and its first two s-derivatives, jointly.

    Euler-Maclaurin: head sum of n_head terms, tail integral, half term,
    Bernoulli corrections through B_{2 jmax}.  Every term is
    differentiated analytically in s (forward-mode pairs), never by
    numeric differencing.
    """
    _require(a > 0, "zeta core requires a > 0")
    _require(s != 1.0, "zeta has a pole at s = 1", PoleError)
    if n_head is None:
        n_head = _zeta_em_head_length(s)
    d0, d1, d2 = [], [], []
    for n in range(n_head):
        ell = log(n + a)
        t = exp(-s * ell)
        d0.append(t)
        d1.append(-ell * t)
        d2.append(ell * ell * t)
    big = a + n_head
    ell = log(big)
    t = exp(-s * ell)  # big^(-s)
    # tail integral big^(1-s)/(s-1)
    q = 1.0 / (s - 1.0)
    integ = big * t * q
    d0.append(integ)
    d1.append(-integ * (ell + q))
    d2.append(integ * (ell * ell + 2 * ell * q + 2 * q * q))
    # half term big^(-s)/2
    d0.append(0.5 * t)
    d1.append(-0.5 * ell * t)
    d2.append(0.5 * ell * ell * t)
    # corrections: B_2j/(2j)! * (s)_{2j-1} * big^(-s-2j+1)
    last = (0.0, 0.0, 0.0)
    for j in range(1, jmax + 1):
        p0, p1, p2 = 1.0, 0.0, 0.0  # Pochhammer (s)_{2j-1} and s-derivatives
        for i in range(2 * j - 1):
            p2 = p2 * (s + i) + 2 * p1
            p1 = p1 * (s + i) + p0
            p0 = p0 * (s + i)
        coeff = float(_bernoulli_number(2 * j)) / math.factorial(2 * j)
        w = exp(-(s + 2 * j - 1) * ell)  # big^(-s-2j+1)
        # product rule with w' = -ell*w, w'' = ell^2*w
        t0 = coeff * p0 * w
        t1 = coeff * (p1 * w - p0 * ell * w)
        t2 = coeff * (p2 * w - 2 * p1 * ell * w + p0 * ell * ell * w)
        d0.append(t0)
        d1.append(t1)
        d2.append(t2)
        last = (t0, t1, t2)
    scale = max(abs(x) for x in d0)
    err0 = abs(last[0]) + 8 * _EPS * scale
    err1 = abs(last[1]) + 8 * _EPS * max(abs(x) for x in d1)
    err2 = abs(last[2]) + 8 * _EPS * max(abs(x) for x in d2)
    return ((fsum(d0), err0), (fsum(d1), err1), (fsum(d2), err2))


def hurwitz_zeta(s: float, a: float) -> ValueWithError:
    """Hurwitz zeta(s, a), analytically continued (s != 1, a > 0)."""
    (v, e), _, _ = _zeta_em_triple(s, a)
    return ValueWithError(v, e)


def hurwitz_zeta_sderiv(s: float, a: float) -> ValueWithError:
    """d/ds of Hurwitz zeta(s, a)."""
    _, (v, e), _ = _zeta_em_triple(s, a)
    return ValueWithError(v, e)


def riemann_zeta_deriv(k: int, s: float) -> ValueWithError:
    """k-th s-derivative of the Riemann zeta function, k in {0, 1, 2}."""
    _require(isinstance(k, int) and 0 <= k <= 2, "derivative order must be 0..2")
    triple = _zeta_em_triple(s, 1.0)
    v, e = triple[k]
    return ValueWithError(v, e)


def alternating_zeta_deriv(k: int, s: float) -> ValueWithError:
    """k-th derivative of the alternating zeta sum_{n>=1} (-1)^(n+1) n^(-s).

    Uses zeta_a(s) = (1 - 2^(1-s)) zeta(s) and its s-derivatives.
    """
    _require(isinstance(k, int) and 0 <= k <= 1, "derivative order must be 0..1")
    two = 2.0 ** (1.0 - s)
    l2 = log(2.0)
    z = riemann_zeta_deriv(0, s)
    if k == 0:
        return ValueWithError((1 - two) * z.value, (1 + two) * z.err_bound)
    zp = riemann_zeta_deriv(1, s)
    v = (1 - two) * zp.value + two * l2 * z.value
    return ValueWithError(v, (1 + two) * zp.err_bound + two * l2 * z.err_bound)


# ---------------------------------------------------------------------------
# Constants (each with its own documented oracle)
# ---------------------------------------------------------------------------

def _compute_euler_gamma() -> float:
    # Oracle: Euler-Maclaurin on H_n - log n at n = 10^6,
    # gamma = H_n - log n - 1/(2n) + 1/(12 n^2) - 1/(120 n^4) + ...
    n = 10 ** 6
    h = fsum(1.0 / k for k in range(n, 0, -1))
    x = float(n)
    corr = -1.0 / (2 * x) + 1.0 / (12 * x * x) - 1.0 / (120 * x ** 4)
    return h - log(x) + corr


_EULER_GAMMA = 0.5772156649015329  # bootstrap value for Ci; audited in _Constants
_LOG_TWO_PI = log(2 * pi)


def _euler_transform_tail(term, n0: int, depth: int = 24) -> float:
    # Accelerated sum_{n>=n0} (-1)^n |term(n)| style alternating tails:
    # `term` must return the signed term; iterated averaging of partial sums.
    partials = []
    s = 0.0
    for n in range(n0, n0 + depth + 1):
        s += term(n)
        partials.append(s)
    row = partials
    while len(row) > 1:
        row = [(row[i] + row[i + 1]) / 2 for i in range(len(row) - 1)]
    return row[0]


def _compute_catalan() -> float:
    # Oracle: G = sum (-1)^n / (2n+1)^2, head direct + Euler-transform tail.
    head = fsum((-1.0) ** n / (2 * n + 1) ** 2 for n in range(40))
    tail = _euler_transform_tail(lambda n: (-1.0) ** n / (2 * n + 1) ** 2, 40, 40)
    return head + tail


class _Constants:
    """Fundamental scalars with internal oracles, computed once on first use."""

    def __init__(self):
        self._cache = {}

    def _get(self, name, fn):
        if name not in self._cache:
            self._cache[name] = fn()
        return self._cache[name]

    @property
    def euler_gamma(self) -> float:
        return self._get("euler_gamma", _compute_euler_gamma)

    @property
    def log_two_pi(self) -> float:
        return _LOG_TWO_PI

    @property
    def zeta3(self) -> float:
        # Oracle: Euler-Maclaurin continuation of sum n^(-3).
        return self._get("zeta3", lambda: riemann_zeta_deriv(0, 3.0).value)

    @property
    def zeta_prime_2(self) -> float:
        # Oracle: Euler-Maclaurin on -sum log n / n^2 (the d/ds EM core at s=2).
        return self._get("zeta_prime_2", lambda: riemann_zeta_deriv(1, 2.0).value)

    @property
    def zeta_dprime_2(self) -> float:
        # Oracle: Euler-Maclaurin on sum log^2 n / n^2 (d2/ds2 EM core at s=2).
        return self._get("zeta_dprime_2", lambda: riemann_zeta_deriv(2, 2.0).value)

    @property
    def zeta_prime_minus1(self) -> float:
        # Oracle: zeta'(-1) = (1/12)(1 - gamma - log 2pi) + zeta'(2)/(2 pi^2),
        # from differentiating the functional equation.
        return self._get(
            "zeta_prime_minus1",
            lambda: (1.0 - self.euler_gamma - self.log_two_pi) / 12.0
            + self.zeta_prime_2 / (2 * pi * pi),
        )

    @property
    def log_glaisher(self) -> float:
        # Oracle: log A = 1/12 - zeta'(-1).
        return self._get("log_glaisher", lambda: 1.0 / 12.0 - self.zeta_prime_minus1)

    @property
    def catalan(self) -> float:
        return self._get("catalan", _compute_catalan)


constants = _Constants()


# ---------------------------------------------------------------------------
# Barnes G
# ---------------------------------------------------------------------------

_BARNES_HEAD_N = 200


@lru_cache(maxsize=None)
def _zeta_tail_beyond(m: int, n: int) -> float:
    # sum_{k > n} k^(-m) via the Euler-Maclaurin tail alone (no cancellation).
    x = float(n)
    terms = [x ** (1 - m) / (m - 1), -0.5 * x ** (-m)]
    for j in range(1, 9):
        # Pochhammer (m)_{2j-1}
        poch = 1.0
        for i in range(2 * j - 1):
            poch *= m + i
        terms.append(float(_bernoulli_number(2 * j)) / math.factorial(2 * j)
                     * poch * x ** (-m - 2 * j + 1))
    return fsum(terms)


def log_barnes_g(x: float) -> ValueWithError:
    """log G(x) for x > 0, from the canonical product for G(1+z).

    log G(1+z) = (z/2) log 2pi - (z^2 + gamma z^2 + z)/2
                 + sum_{n>=1} [n log(1+z/n) - z + z^2/(2n)],
    head summed directly to n = 200, tail summed analytically via
    n log(1+z/n) - z + z^2/(2n) = sum_{k>=3} (-1)^(k+1) z^k/(k n^(k-1)).
    """
    _require(math.isfinite(x) and x > 0, "log_barnes_g requires finite x > 0")
    z = x - 1.0
    g = constants.euler_gamma
    base = 0.5 * z * _LOG_TWO_PI - 0.5 * (z * z + g * z * z + z)
    head = []
    for n in range(1, _BARNES_HEAD_N + 1):
        head.append(n * math.log1p(z / n) - z + z * z / (2 * n))
    tail_terms = []
    zk = z ** 3
    k = 3
    while True:
        t = ((-1.0) ** (k + 1)) * zk / k * _zeta_tail_beyond(k - 1, _BARNES_HEAD_N)
        tail_terms.append(t)
        if abs(t) < 1e-19:
            break
        k += 1
        zk *= z
        if k > 60:
            raise ConvergenceError("Barnes G tail did not converge")
    v = base + fsum(head) + fsum(tail_terms)
    err = 1e-14 * (1.0 + abs(v)) + abs(tail_terms[-1])
    return ValueWithError(v, err)


# ---------------------------------------------------------------------------
# Dilogarithm (real branch, x <= 1)
# ---------------------------------------------------------------------------

def _dilog_series(x: float):
    # |x| <= 0.5: direct series
    acc = []
    t = x
    n = 1
    while abs(t) > 1e-18 and n < 200:
        acc.append(t / (n * n))
        t *= x
        n += 1
    return fsum(acc), abs(t) + 4 * _EPS


def dilog(x: float) -> ValueWithError:
    """Li2(x) on the real branch x <= 1."""
    _require(math.isfinite(x) and x <= 1.0, "dilog requires x <= 1")
    if x == 1.0:
        return ValueWithError(pi * pi / 6, 4 * _EPS)
    if x == 0.0:
        return ValueWithError(0.0, 0.0)
    if x < -1.0:
        # inversion: Li2(x) = -pi^2/6 - log^2(-x)/2 - Li2(1/x)
        inner = dilog(1.0 / x)
        v = -pi * pi / 6 - 0.5 * log(-x) ** 2 - inner.value
        return ValueWithError(v, inner.err_bound + 8 * _EPS * (1 + abs(v)))
    if x > 0.5:
        # reflection: Li2(x) = pi^2/6 - log x log(1-x) - Li2(1-x)
        inner = dilog(1.0 - x)
        v = pi * pi / 6 - log(x) * math.log1p(-x) - inner.value
        return ValueWithError(v, inner.err_bound + 8 * _EPS * (1 + abs(v)))
    if x < -0.5:
        # Landen: Li2(x) = -Li2(x/(x-1)) - log^2(1-x)/2
        inner = dilog(x / (x - 1.0))
        v = -inner.value - 0.5 * math.log1p(-x) ** 2
        return ValueWithError(v, inner.err_bound + 8 * _EPS * (1 + abs(v)))
    v, e = _dilog_series(x)
    return ValueWithError(v, e)


# ---------------------------------------------------------------------------
# The lattice function phi(p/q)
# ---------------------------------------------------------------------------

def phi_rational(p: int, q: int) -> ValueWithError:
    """phi(p/q) = 1 + 2 sum 1/((p/q) n ((p/q) n)^2 - 1)) by its closed form.

    Closed form: phi(p/q) = (2q/p)[log 2p
        - 2 sum_{0 < j < p/2} cos(2 pi q j / p) log sin(pi j / p)]
        + 2q sum_{j=1}^{floor(q/p)} 1/(p j - q).
    """
    _require(isinstance(p, int) and p >= 1, "p must be a positive integer")
    _require(isinstance(q, int) and q >= 2, "q must be an integer >= 2")
    _require(math.gcd(p, q) == 1, "p and q must be coprime")
    _require(q % p != 0, "phi(p/q) undefined when p divides q (series pole)")
    first = 0.0
    j = 1
    terms = []
    while 2 * j < p:
        terms.append(cos(2 * pi * q * j / p) * log(sin(pi * j / p)))
        j += 1
    first = fsum(terms) if terms else 0.0
    v = (2.0 * q / p) * (log(2.0 * p) - 2.0 * first)
    rat = fsum(1.0 / (p * j - q) for j in range(1, q // p + 1))
    v += 2.0 * q * rat
    return ValueWithError(v, 1e-14 * (1.0 + abs(v)))


def phi_direct(a: float, n_terms: int = 200000) -> ValueWithError:
    """phi(a) = 1 + 2 sum_{n>=1} 1/(a n ((a n)^2 - 1)), summed directly.

    Cross-check oracle for phi_rational; terms decay like 2/(a^3 n^3) so a
    tail integral bound closes the budget.
    """
    _require(a > 0, "phi_direct requires a > 0")
    terms = []
    for n in range(n_terms, 0, -1):
        an = a * n
        d = an * (an * an - 1.0)
        _require(abs(d) > 1e-12, "phi series hits a pole (a n = 1)")
        terms.append(1.0 / d)
    tail = 1.0 / (a ** 3 * n_terms ** 2)  # integral bound of 2/(a^3 n^3)
    return ValueWithError(1.0 + 2.0 * fsum(terms) + tail, 2.0 * tail)
