"""Summation of infinite series to verification accuracy.

Four tail strategies:

* direct_with_bound    -- partial sum plus an integral tail bound for
                          monotone power-law decay (with a decay probe
                          that warns on strategy mismatch);
* euler_maclaurin      -- long head plus Euler-Maclaurin tail for smooth
                          positive terms (log-weighted families);
* alternating_acceleration -- iterated averaging (Euler transform);
* asymptotic_analytic  -- exact head plus a caller-supplied closed-form
                          tail.

On top of sum_series sit the lattice summers for the Ci/si families:
heads are summed exactly through n = 64 and the tails come from the
asymptotic expansions Ci(x) ~ sin x P(1/x^2)/x - cos x Q(1/x^2)/x^2 and
si(x) ~ -cos x P/x - sin x Q/x^2.  At abscissa steps that are integer
multiples of pi/2 the trigonometric factors collapse to a four-term
residue pattern and the tails reduce to Hurwitz zeta values; at generic
steps the oscillatory power sums are computed by Abel summation with
closed-form trigonometric partial sums.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from math import cos, fsum, log, pi, sin

from . import quadrature
from .specfun import (ConvergenceError, DomainError, ValueWithError,
                      cos_integral_Ci, hurwitz_zeta, si_lower)

HEAD_LENGTH = 64
_EM_SWITCH = 10 ** 4
_EULER_DEPTH = 24


class StrategyMismatchWarning(UserWarning):
    """The empirical decay of the terms contradicts the declared strategy."""


@dataclass(frozen=True)
class TailStrategy:
    variant: str  # direct_with_bound | euler_maclaurin | alternating_acceleration | asymptotic_analytic
    decay_exponent: float | None = None
    smooth_extension: object = None  # callable t -> term value, for euler_maclaurin
    tail_closed_form: object = None  # callable N -> ValueWithError, for asymptotic_analytic

    def __post_init__(self):
        if self.variant == "direct_with_bound":
            if self.decay_exponent is None or not self.decay_exponent > 1:
                raise ValueError("direct_with_bound needs decay_exponent > 1")
        elif self.variant == "euler_maclaurin":
            if self.smooth_extension is None:
                raise ValueError("euler_maclaurin needs smooth_extension")
        elif self.variant == "asymptotic_analytic":
            if self.tail_closed_form is None:
                raise ValueError("asymptotic_analytic needs tail_closed_form")
        elif self.variant != "alternating_acceleration":
            raise ValueError(f"unknown tail variant {self.variant!r}")


@dataclass(frozen=True)
class SeriesSpec:
    term: object  # callable n -> float, n >= 1
    tail: TailStrategy
    target_abs_tol: float = 1e-12
    max_terms: int = 10 ** 6

    def __post_init__(self):
        if not self.target_abs_tol > 0:
            raise ValueError("target_abs_tol must be positive")
        if self.max_terms < 10:
            raise ValueError("max_terms too small")


def _decay_probe(term, declared: float):
    # Fit |term(n)| ~ C n^-q on n in [100, 1000]; warn if q is off.
    ns = [100, 178, 316, 562, 1000]
    vals = [abs(term(n)) for n in ns]
    if any(v == 0.0 for v in vals):
        return
    xs = [log(n) for n in ns]
    ys = [log(v) for v in vals]
    xm = fsum(xs) / len(xs)
    ym = fsum(ys) / len(ys)
    slope = fsum((x - xm) * (y - ym) for x, y in zip(xs, ys)) / fsum(
        (x - xm) ** 2 for x in xs)
    q = -slope
    if abs(q - declared) > 0.3:
        warnings.warn(
            f"declared decay exponent {declared} but probe measured {q:.2f}",
            StrategyMismatchWarning)


def _euler_transform(partials):
    row = list(partials)
    while len(row) > 1:
        row = [(row[i] + row[i + 1]) / 2 for i in range(len(row) - 1)]
    return row[0]


def sum_series(spec: SeriesSpec) -> ValueWithError:
    """Sum a SeriesSpec with its declared tail strategy."""
    tail = spec.tail
    if tail.variant == "direct_with_bound":
        q = tail.decay_exponent
        _decay_probe(spec.term, q)
        terms = []
        n = 1
        while True:
            t = spec.term(n)
            terms.append(t)
            # integral bound for a C n^-q envelope fitted to the last term
            bound = abs(t) * n / (q - 1.0)
            if bound <= spec.target_abs_tol or n >= spec.max_terms:
                break
            n += 1
        if bound > spec.target_abs_tol:
            raise ConvergenceError(
                f"direct summation did not reach tol within {spec.max_terms} terms")
        return ValueWithError(fsum(reversed(terms)),
                              bound + 4e-16 * fsum(abs(t) for t in terms))
    if tail.variant == "alternating_acceleration":
        n0 = min(200, spec.max_terms // 2)
        head = fsum(spec.term(n) for n in range(n0, 0, -1))
        partials = []
        acc = 0.0
        for n in range(n0 + 1, n0 + 2 + _EULER_DEPTH):
            acc += spec.term(n)
            partials.append(acc)
        deep = _euler_transform(partials)
        shallow = _euler_transform(partials[:-4])
        err = abs(deep - shallow) + 4e-16 * (abs(head) + 1.0)
        return ValueWithError(head + deep, max(err, 1e-16))
    if tail.variant == "euler_maclaurin":
        f = tail.smooth_extension
        n0 = _EM_SWITCH
        head = fsum(spec.term(n) for n in range(n0, 0, -1))
        integral = quadrature.integrate_semi_infinite(
            quadrature.semi_infinite(float(n0), f, tol=spec.target_abs_tol / 10))
        f0 = f(float(n0))
        fp = (f(float(n0 + 1)) - f(float(n0 - 1))) / 2.0
        # sum_{n>n0} f(n) = int_n0^inf f - f(n0)/2 - f'(n0)/12 + O(f''')
        tail_val = integral.value - 0.5 * f0 - fp / 12.0
        fppp = (f(float(n0 + 2)) - 2 * f(float(n0 + 1))
                + 2 * f(float(n0 - 1)) - f(float(n0 - 2))) / 2.0
        err = integral.err_bound + abs(fppp) / 720.0 + 4e-16 * abs(head)
        return ValueWithError(head + tail_val, err)
    # asymptotic_analytic
    head = fsum(spec.term(n) for n in range(HEAD_LENGTH, 0, -1))
    tail_v = tail.tail_closed_form(HEAD_LENGTH)
    if not isinstance(tail_v, ValueWithError):
        tail_v = ValueWithError(float(tail_v), 0.0)
    return ValueWithError(head + tail_v.value,
                          tail_v.err_bound + 4e-16 * (abs(head) + 1.0))


# ---------------------------------------------------------------------------
# Oscillatory power tails: sum_{n>N} trig(n s)/n^k
# ---------------------------------------------------------------------------

def _is_half_pi_lattice(s: float):
    m = s / (pi / 2)
    mr = round(m)
    if mr != 0 and abs(m - mr) < 1e-12:
        return int(mr)
    return None


def _lattice_trig_tail(kind: str, m: int, k: float, n_start: int) -> float:
    # sum_{n >= n_start} trig(n m pi/2)/n^k via the 4-residue pattern.
    total = 0.0
    for r in range(4):
        ang = (r * m) % 4
        val = (0.0, 1.0, 0.0, -1.0)[ang] if kind == "sin" else (1.0, 0.0, -1.0, 0.0)[ang]
        if val == 0.0:
            continue
        first = n_start + ((r - n_start) % 4)
        total += val * 4.0 ** (-k) * hurwitz_zeta(k, first / 4.0).value
    return total


def _abel_trig_tail(kind: str, s: float, k: float, n_start: int,
                    tol: float) -> float:
    # Abel summation: sum_{n>=M} trig(ns) f(n) with f(n)=n^-k, using the
    # closed-form partial sums D_n of the pure trig series.  The
    # transformed series converges absolutely like n^-(k+1).
    half = s / 2.0
    denom = 2.0 * sin(half)
    if abs(denom) < 1e-9:
        raise DomainError("oscillatory tail needs s away from multiples of 2 pi")

    def d_partial(n):  # sum_{m=1}^n trig(m s)
        if kind == "sin":
            return sin(n * half) * sin((n + 1) * half) / sin(half)
        return sin(n * half) * cos((n + 1) * half) / sin(half)

    m0 = n_start
    f = lambda n: n ** (-k)
    acc = [-d_partial(m0 - 1) * f(m0)]
    dmax = 1.0 / abs(sin(half))
    n = m0
    while True:
        acc.append(d_partial(n) * (f(n) - f(n + 1)))
        # remainder bound: Dmax * sum_{m>n} (f(m)-f(m+1)) = Dmax * f(n+1)
        if dmax * f(n + 1) < tol or n > m0 + 5 * 10 ** 5:
            break
        n += 1
    if dmax * f(n + 1) >= tol:
        raise ConvergenceError("oscillatory tail did not converge")
    return fsum(acc)


def _trig_power_tail(kind: str, s: float, k: float, n_start: int,
                     alternating: bool, tol: float = 1e-15) -> float:
    """sum_{n >= n_start} (+-1)^n trig(n s)/n^k."""
    if alternating:
        s = s + pi  # (-1)^n sin(ns) = sin(n(s+pi)), same for cos
    s = math.fmod(s, 2 * pi)
    if s < 0:
        s += 2 * pi
    m = _is_half_pi_lattice(s) if s != 0.0 else 0
    if s == 0.0 or (m is not None and m % 4 == 0):
        # trig factor is constant: sin -> 0, cos -> 1
        if kind == "sin":
            return 0.0
        return 4.0 ** (-k) * fsum(
            hurwitz_zeta(k, (n_start + ((r - n_start) % 4)) / 4.0).value
            for r in range(4))
    if m is not None:
        return _lattice_trig_tail(kind, m, k, n_start)
    return _abel_trig_tail(kind, s, k, n_start, tol)


# ---------------------------------------------------------------------------
# Ci / si lattice sums
# ---------------------------------------------------------------------------

def _asymptotic_tail(scale: float, weight_powers, alternating: bool,
                     n_start: int, si_mode: bool) -> ValueWithError:
    """Tail of sum (+-1)^n W(n) X(n scale) for n >= n_start, where X is Ci
    (si_mode False) or si (True) and W(n) = sum_c coeff * n^-exp from
    `weight_powers`.

    Uses Ci(x) = f(x) sin x - g(x) cos x, si(x) = -f(x) cos x - g(x) sin x
    with f ~ sum (-1)^j (2j)!/x^(2j+1), g ~ sum (-1)^j (2j+1)!/x^(2j+2).
    """
    parts = []
    trunc = 0.0
    x0 = n_start * scale
    for j in range(0, 12):
        a_j = ((-1) ** j) * math.factorial(2 * j)       # f coefficient
        b_j = ((-1) ** j) * math.factorial(2 * j + 1)   # g coefficient
        fmag = abs(a_j) / x0 ** (2 * j + 1)
        gmag = abs(b_j) / x0 ** (2 * j + 2)
        if fmag < 1e-18 and gmag < 1e-18:
            break
        if j == 11 or fmag > (abs(math.factorial(2 * j - 2)) / x0 ** (2 * j - 1)
                              if j else math.inf):
            # expansion has started diverging; stop and charge the budget
            trunc += (fmag + gmag) * fsum(
                abs(c) * n_start ** (1.0 - e) for e, c in weight_powers)
            break
        for e, c in weight_powers:
            # f-part: sin for Ci, -cos for si ; g-part: -cos for Ci, -sin for si
            k_f = e + 2 * j + 1
            k_g = e + 2 * j + 2
            if si_mode:
                parts.append(-c * a_j / scale ** (2 * j + 1)
                             * _trig_power_tail("cos", scale, k_f, n_start, alternating))
                parts.append(-c * b_j / scale ** (2 * j + 2)
                             * _trig_power_tail("sin", scale, k_g, n_start, alternating))
            else:
                parts.append(c * a_j / scale ** (2 * j + 1)
                             * _trig_power_tail("sin", scale, k_f, n_start, alternating))
                parts.append(-c * b_j / scale ** (2 * j + 2)
                             * _trig_power_tail("cos", scale, k_g, n_start, alternating))
    else:
        j = 12
    # truncation of the asymptotic expansion beyond the last used j
    trunc += (math.factorial(2 * j) / x0 ** (2 * j + 1)) * fsum(
        abs(c) * max(1.0, n_start ** (1.0 - e)) for e, c in weight_powers)
    return ValueWithError(fsum(parts), trunc + 1e-15 * (1.0 + abs(fsum(parts))))


def _weight_powers_simple(exponent: int):
    return [(float(exponent), 1.0)]


def _weight_powers_rational(p: float, n_start: int):
    # 1/(n (4n^2 - p^2)) = sum_{m>=0} p^(2m) / (4^(m+1) n^(2m+3))
    out = []
    m = 0
    while True:
        c = p ** (2 * m) / 4.0 ** (m + 1)
        e = 2 * m + 3
        if c * n_start ** (-(e - 3)) < 1e-18 * 0.25 or m > 40:
            out.append((float(e), c))
            break
        out.append((float(e), c))
        m += 1
    return out


def sum_ci_lattice(scale: float, weight_exponent: int,
                   alternating: bool = False,
                   head_length: int = HEAD_LENGTH) -> ValueWithError:
    """sum_{n>=1} (+-1)^n Ci(n * scale)/n^weight_exponent."""
    if not scale > 0:
        raise DomainError("scale must be positive")
    if weight_exponent not in (0, 1, 2):
        raise DomainError("weight_exponent must be 0, 1 or 2")
    if weight_exponent == 0 and not alternating and _is_half_pi_lattice(scale) is None:
        raise DomainError("unweighted non-alternating Ci sum needs a lattice scale")
    sign = -1.0 if alternating else 1.0
    head_terms = []
    head_err = 0.0
    s = 1.0
    for n in range(1, head_length + 1):
        s = sign ** n if alternating else 1.0
        ci = cos_integral_Ci(n * scale)
        head_terms.append(s * ci.value / n ** weight_exponent)
        head_err += ci.err_bound / n ** weight_exponent
    tail = _asymptotic_tail(scale, _weight_powers_simple(weight_exponent),
                            alternating, head_length + 1, si_mode=False)
    return ValueWithError(fsum(head_terms) + tail.value,
                          head_err + tail.err_bound
                          + 4e-16 * fsum(abs(t) for t in head_terms))


def sum_si_lattice(scale: float, weight: str = "1/n",
                   alternating: bool = False, p: float = 0.0,
                   head_length: int = HEAD_LENGTH) -> ValueWithError:
    """sum_{n>=1} (+-1)^n si(n * scale) * w(n).

    weight "1/n" gives w(n) = 1/n; weight "1/(n(4n^2-p^2))" gives the
    rational weight used by the Nielsen-representation identities.
    """
    if not scale > 0:
        raise DomainError("scale must be positive")
    if weight not in ("1/n", "1/(4n^2-p^2)", "1/(n(4n^2-p^2))"):
        raise DomainError(f"unsupported weight {weight!r}")
    if weight != "1/n":
        half_p = p / 2.0
        if abs(half_p - round(half_p)) < 1e-9 and round(half_p) != 0:
            raise DomainError("rational weight needs p away from even integers")

    def w(n):
        if weight == "1/n":
            return 1.0 / n
        d = 4.0 * n * n - p * p
        if abs(d) < 1e-8:
            raise DomainError("weight denominator vanishes")
        if weight == "1/(4n^2-p^2)":
            return 1.0 / d
        return 1.0 / (n * d)

    sign = -1.0 if alternating else 1.0
    head_terms = []
    head_err = 0.0
    for n in range(1, head_length + 1):
        s = sign ** n if alternating else 1.0
        si = si_lower(n * scale)
        head_terms.append(s * si.value * w(n))
        head_err += si.err_bound * abs(w(n))
    if weight == "1/n":
        powers = _weight_powers_simple(1)
    elif weight == "1/(4n^2-p^2)":
        powers = [(e - 1.0, c) for e, c in _weight_powers_rational(p, head_length + 1)]
    else:
        powers = _weight_powers_rational(p, head_length + 1)
    tail = _asymptotic_tail(scale, powers, alternating, head_length + 1,
                            si_mode=True)
    return ValueWithError(fsum(head_terms) + tail.value,
                          head_err + tail.err_bound
                          + 4e-16 * fsum(abs(t) for t in head_terms))


def sum_ci_rational(scale: float, p: float,
                    head_length: int = HEAD_LENGTH) -> ValueWithError:
    """sum_{n>=1} Ci(n * scale)/(4n^2 - p^2)."""
    if not scale > 0:
        raise DomainError("scale must be positive")
    head_terms = []
    head_err = 0.0
    for n in range(1, head_length + 1):
        d = 4.0 * n * n - p * p
        if abs(d) < 1e-8:
            raise DomainError("weight denominator vanishes")
        ci = cos_integral_Ci(n * scale)
        head_terms.append(ci.value / d)
        head_err += ci.err_bound / abs(d)
    powers = [(e - 1.0, c) for e, c in
              _weight_powers_rational(p, head_length + 1)]
    tail = _asymptotic_tail(scale, powers, False, head_length + 1,
                            si_mode=False)
    return ValueWithError(fsum(head_terms) + tail.value,
                          head_err + tail.err_bound
                          + 4e-16 * fsum(abs(t) for t in head_terms))


def sum_sin_rational(scale: float, p: float,
                     head_length: int = HEAD_LENGTH) -> ValueWithError:
    """sum_{n>=1} sin(n * scale)/(n(4n^2 - p^2))."""
    head_terms = []
    for n in range(1, head_length + 1):
        d = 4.0 * n * n - p * p
        if abs(d) < 1e-8:
            raise DomainError("weight denominator vanishes")
        head_terms.append(sin(n * scale) / (n * d))
    tail_parts = [c * _trig_power_tail("sin", scale, e, head_length + 1, False)
                  for e, c in _weight_powers_rational(p, head_length + 1)]
    return ValueWithError(fsum(head_terms) + fsum(tail_parts),
                          1e-14 * (1.0 + fsum(abs(t) for t in head_terms)))


def _signed_power_tail(k: float, n_start: int, alternating: bool) -> float:
    # sum_{n >= n_start} (+-1)^n / n^k
    if not alternating:
        return hurwitz_zeta(k, float(n_start)).value
    out = 0.0
    for r in (0, 1):
        first = n_start + ((r - n_start) % 2)
        out += (1.0 if r == 0 else -1.0) * 2.0 ** (-k) \
            * hurwitz_zeta(k, first / 2.0).value
    return out


def sum_aux_lattice(scale: float, weight_exponent: int, kernel: str,
                    alternating: bool = False,
                    head_length: int = HEAD_LENGTH) -> ValueWithError:
    """sum_{n>=1} (+-1)^n K(n * scale)/n^weight_exponent for the auxiliary
    kernels K = aux_f (= sin x Ci x - cos x si x) or aux_g
    (= -cos x Ci x - sin x si x).

    Both kernels are non-oscillatory with pure power asymptotics
    (aux_f ~ sum (-1)^j (2j)!/x^(2j+1), aux_g ~ sum (-1)^j (2j+1)!/x^(2j+2)),
    so the tails reduce to zeta values at any positive scale.
    """
    from .specfun import aux_f, aux_g
    if not scale > 0:
        raise DomainError("scale must be positive")
    if kernel not in ("aux_f", "aux_g"):
        raise DomainError(f"unknown kernel {kernel!r}")
    kfun = aux_f if kernel == "aux_f" else aux_g
    w = weight_exponent
    sign = -1.0 if alternating else 1.0
    head_terms = []
    head_err = 0.0
    for n in range(1, head_length + 1):
        s = sign ** n if alternating else 1.0
        v = kfun(n * scale)
        head_terms.append(s * v.value / n ** w)
        head_err += v.err_bound / n ** w
    n0 = head_length + 1
    x0 = n0 * scale
    parts = []
    j = 0
    while True:
        if kernel == "aux_f":
            coef = ((-1) ** j) * math.factorial(2 * j)
            power = 2 * j + 1
        else:
            coef = ((-1) ** j) * math.factorial(2 * j + 1)
            power = 2 * j + 2
        mag = abs(coef) / x0 ** power
        if mag < 1e-18 or j > 11:
            break
        parts.append(coef / scale ** power
                     * _signed_power_tail(w + power, n0, alternating))
        j += 1
    trunc = (abs(math.factorial(2 * j + (0 if kernel == "aux_f" else 1)))
             / x0 ** (2 * j + (1 if kernel == "aux_f" else 2))) \
        * max(1.0, n0 ** (1.0 - w))
    return ValueWithError(fsum(head_terms) + fsum(parts),
                          head_err + trunc
                          + 4e-16 * fsum(abs(t) for t in head_terms))


def sum_oscillatory(theta: float, phase: float, f, n_start: int = 1,
                    depth: int = 4, n_terms: int = 4000) -> ValueWithError:
    """sum_{n >= n_start} sin(n*theta + phase) * f(n) for smooth, slowly
    decaying f, by `depth` rounds of Abel summation.

    Each round telescopes the constant part of the trigonometric partial
    sums exactly and turns the oscillatory part into a series one power
    of n more convergent, using forward differences of f.
    """
    half = theta / 2.0
    if abs(sin(half)) < 1e-9:
        raise DomainError("oscillatory sum needs theta away from multiples of 2 pi")

    cache = {}

    def fv(n):
        if n not in cache:
            cache[n] = f(n)
        return cache[n]

    def diff(d, n):
        if d == 0:
            return fv(n)
        return diff(d - 1, n) - diff(d - 1, n + 1)

    def level(d, ph, m0):
        # sum_{n>=m0} sin(n theta + ph) * Delta^d f(n)
        # = A * Delta^d f(m0) - sum_{n>=m0} cos((n+1/2) theta + ph)/(2 sin half) * Delta^(d+1) f(n)
        # where A = cos((m0 - 1/2) theta + ph)/(2 sin half).
        a_const = cos((m0 - 0.5) * theta + ph) / (2.0 * sin(half))
        if d >= depth:
            # direct summation of the (now fast-converging) series
            acc = []
            for n in range(m0, m0 + n_terms):
                acc.append(sin(n * theta + ph) * diff(d, n))
            return fsum(acc), abs(diff(d, m0 + n_terms)) / abs(sin(half))
        # cos((n+1/2) theta + ph) = sin(n theta + ph + pi/2 + theta/2)
        inner, ierr = level(d + 1, ph + pi / 2 + half, m0)
        return a_const * diff(d, m0) - inner / (2.0 * sin(half)), \
            ierr / abs(2.0 * sin(half))

    v, e = level(0, phase, n_start)
    return ValueWithError(v, e + 1e-15 * (1.0 + abs(v)))


# ---------------------------------------------------------------------------
# Log-weighted sums
# ---------------------------------------------------------------------------

def sum_log_weighted(p: float, squared: bool = False) -> ValueWithError:
    """sum_{n>=1} log n / (4n^2 - p^2) (denominator squared if `squared`).

    Direct head to n = 10^4, then an Euler-Maclaurin tail on the smooth
    extension log t / (4t^2 - p^2)^m.
    """
    m = 2 if squared else 1
    for n in range(1, 20):
        if abs(4.0 * n * n - p * p) < 1e-8:
            raise DomainError("4n^2 - p^2 vanishes; use the limit entry instead")

    def f(t):
        if t > 1e60:
            return 0.0
        return log(t) / (4.0 * t * t - p * p) ** m

    spec = SeriesSpec(term=lambda n: 0.0 if n == 1 else f(float(n)),
                      tail=TailStrategy("euler_maclaurin", smooth_extension=f),
                      target_abs_tol=1e-12)
    return sum_series(spec)
