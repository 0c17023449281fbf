"""Finite and semi-infinite numerical integration.

Finite intervals use the double-exponential (tanh-sinh) transformation,
which absorbs endpoint logarithmic singularities without special-casing.
Semi-infinite integrals use the exp-sinh transformation for monotone
decay; slowly decaying oscillatory integrands (the sinc family) are
integrated period by period with alternating-series extrapolation on the
partial sums.

Refinement works on nested grids: node values are stored without the
step factor h, so each halving of h reuses every previous evaluation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from math import cosh, exp, fsum, pi, sinh

from .specfun import ConvergenceError, ValueWithError

DEFAULT_TOL = 1e-11
MAX_EVALS = 2 * 10 ** 6
_MAX_LEVEL = 12
_T_MAX = 6.8  # abscissa cutoff: beyond this the DE weights underflow
_EPS = 2.220446049250313e-16


@dataclass(frozen=True)
class IntegrandSpec:
    """One integrand with its domain, singularity hints and tolerance."""

    evaluator: callable
    domain: tuple  # ("finite", a, b) or ("semi_infinite", a)
    singularity_hints: frozenset = frozenset()
    target_abs_tol: float = DEFAULT_TOL

    def __post_init__(self):
        if self.domain[0] == "finite":
            _, a, b = self.domain
            if not a < b:
                raise ValueError("finite domain requires a < b")
        elif self.domain[0] != "semi_infinite":
            raise ValueError(f"unknown domain kind {self.domain[0]!r}")
        if not self.target_abs_tol > 0:
            raise ValueError("target_abs_tol must be positive")


def finite(a: float, b: float, evaluator, tol: float = DEFAULT_TOL,
           hints=()) -> IntegrandSpec:
    return IntegrandSpec(evaluator, ("finite", a, b), frozenset(hints), tol)


def semi_infinite(a: float, evaluator, tol: float = DEFAULT_TOL,
                  hints=()) -> IntegrandSpec:
    return IntegrandSpec(evaluator, ("semi_infinite", a), frozenset(hints), tol)


class _EvalBudget:
    def __init__(self, limit=MAX_EVALS):
        self.limit = limit
        self.used = 0

    def spend(self, n=1):
        self.used += n
        if self.used > self.limit:
            raise ConvergenceError(
                f"integrand evaluation budget exhausted ({self.limit})")


def _refine(sample_level, spec, max_level):
    """Shared refinement driver.

    `sample_level(level, store)` appends h-free node values (f * weight)
    for the nodes newly introduced at `level`.  The trapezoid value at a
    level is h * sum(all stored values); successive differences give the
    error estimate, squared once convergence sets in (double-exponential
    schemes converge quadratically in the number of levels).
    """
    store = []
    prev = None
    diff_prev = None
    value = 0.0
    err = math.inf
    for level in range(1, max_level + 1):
        sample_level(level, store)
        h = 2.0 ** (-level)
        value = h * fsum(store)
        if prev is not None:
            diff = abs(value - prev)
            if diff_prev is not None and diff_prev > 0 and diff > 0:
                err = min(diff, diff * diff / diff_prev)
            else:
                err = diff
            err += 16 * _EPS * h * fsum(abs(p) for p in store)
            if err <= spec.target_abs_tol:
                return ValueWithError(value, err)
            diff_prev = diff
        prev = value
    if not math.isfinite(err) or err > max(1e3 * spec.target_abs_tol, 1e-6):
        raise ConvergenceError(
            f"quadrature did not reach tol={spec.target_abs_tol:g} (err~{err:g})")
    return ValueWithError(value, err)


def integrate_finite(spec: IntegrandSpec,
                     max_level: int = _MAX_LEVEL) -> ValueWithError:
    """Tanh-sinh integration of a finite-interval spec."""
    if spec.domain[0] != "finite":
        raise ValueError("integrate_finite requires a finite domain")
    _, a, b = spec.domain
    f = spec.evaluator
    half = (b - a) / 2.0
    budget = _EvalBudget()

    def sample_level(level, store):
        h = 2.0 ** (-level)
        k = 0 if level == 1 else 1
        step = 1 if level == 1 else 2
        while True:
            t = k * h
            if t > _T_MAX:
                break
            u = (pi / 2) * sinh(t)
            if u > 350.0:
                break
            # 1 - tanh(u) = 2/(exp(2u) + 1), accurate for all u >= 0
            d = 2.0 / (math.exp(2 * u) + 1.0)
            w = half * (pi / 2) * cosh(t) * (d * (2.0 - d))  # sech^2 u
            dist = half * d
            if t == 0.0:
                budget.spend()
                store.append(w * f(a + half))
            elif dist > 0.0 and w > 0.0:
                budget.spend(2)
                store.append(w * f(a + dist))
                store.append(w * f(b - dist))
            k += step

    return _refine(sample_level, spec, max_level)


def integrate_semi_infinite(spec: IntegrandSpec,
                            max_level: int = _MAX_LEVEL) -> ValueWithError:
    """Exp-sinh integration of a decaying integrand on [a, inf)."""
    if spec.domain[0] != "semi_infinite":
        raise ValueError("integrate_semi_infinite requires a semi-infinite domain")
    _, a = spec.domain
    f = spec.evaluator
    budget = _EvalBudget()

    def sample_level(level, store):
        h = 2.0 ** (-level)
        k = 0 if level == 1 else 1
        step = 1 if level == 1 else 2
        while True:
            t = k * h
            if t > _T_MAX:
                break
            u = (pi / 2) * sinh(t)
            if u > 700.0:
                break
            x = exp(u)
            w = (pi / 2) * cosh(t) * x
            budget.spend()
            v = w * f(a + x)
            if math.isfinite(v):
                store.append(v)
            if t > 0.0:
                xm = exp(-u)
                wm = (pi / 2) * cosh(t) * xm
                budget.spend()
                vm = wm * f(a + xm)
                if math.isfinite(vm):
                    store.append(vm)
            k += step

    return _refine(sample_level, spec, max_level)


def integrate(spec: IntegrandSpec) -> ValueWithError:
    """Dispatch on the spec's domain kind."""
    if spec.domain[0] == "finite":
        return integrate_finite(spec)
    return integrate_semi_infinite(spec)


def integrate_oscillatory(f, a: float, half_period: float,
                          n_periods: int = 1000, depth: int = 24,
                          tol: float = DEFAULT_TOL) -> ValueWithError:
    """Integral on [a, inf) of an integrand whose sign alternates with
    fixed half-period (the sinc family).

    Integrates section by section with tanh-sinh, then applies iterated
    averaging (Euler transform) to the tail of the section sequence.
    """
    sections = []
    lo = a
    for _ in range(n_periods):
        hi = lo + half_period
        piece = integrate_finite(finite(lo, hi, f, tol=tol / 10))
        sections.append(piece)
        lo = hi
    head_n = max(0, len(sections) - depth - 1)
    head = fsum(s.value for s in sections[:head_n])
    partials = []
    acc = head
    for s in sections[head_n:]:
        acc += s.value
        partials.append(acc)
    row = partials
    while len(row) > 1:
        row = [(row[i] + row[i + 1]) / 2 for i in range(len(row) - 1)]
    extrapolated = row[0]
    piece_err = fsum(s.err_bound for s in sections)
    tail_scale = abs(sections[-1].value)
    return ValueWithError(extrapolated, piece_err + tail_scale * 2.0 ** (-depth)
                          + 1e-15 * abs(extrapolated))
