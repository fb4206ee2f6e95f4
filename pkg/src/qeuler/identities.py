"""Symmetry identities of the q-Euler polynomials and their sweep harness.

Each theorem equates two mirror-image expressions in a pair of odd integers
(a, b).  One side, in roles (first, second) = (a, b), reads

  l-function form:   [2]_{q^b}^r [b]_q^s  sum over j-tuples below d*a of
                     (-1)^|j| chi(j_1)...chi(j_r) q^(b|j|)
                     l_r(s, b x + (b/a)|j| | chi)  at deformation q^a,

  polynomial form:   the same combination with [a]_q^n and E_n at q^a,

  power-sum form:    [2]_{q^b}^r sum_{i<=n} binom(n,i) [a]_q^(n-i) [b]_q^i
                     E_{n-i}(b x) at q^a  *  S_{n,i}(a d | chi) at q^b,

and the mirror side swaps the roles of a and b.  Every side evaluator below
takes the roles explicitly and the mirror is produced by literally swapping
the arguments, so instances with a = b agree bit for bit.

The bridge check compares the polynomial form against the power-sum form in
the same orientation; it isolates the shift-expansion rearrangement that
turns the j-sum of polynomial values into power sums.
"""

from __future__ import annotations

import cmath
import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import comb

import numpy as np

from .characters import (
    DirichletCharacter,
    bounded_composition_sums,
    build_character_group,
)
from .errors import BudgetExceeded, DomainError, ParityViolation
from .lfun import LfunSpec, lfun_eval, verify_interpolation
from .polynomials import (
    TUPLE_BUDGET,
    QEulerSpec,
    char_tuple_sum,
    qeuler_addition,
    qeuler_poly,
    qeuler_value,
)
from .qnum import (
    DEFAULT_EPSILON,
    DEFAULT_MAX_TERMS,
    QContext,
    q_bracket_two_pow,
    q_number,
)
from .report import IdentityReport, make_error_report, make_report

DEFAULT_REL_TOL = 1e-7
BRIDGE_REL_TOL = 1e-8


def power_sum(
    chi: DirichletCharacter,
    r: int,
    n: int,
    i: int,
    upper_a: int,
    ctx: QContext,
) -> complex:
    """Alternating character power sum

        S_{n,i}(upper_a | chi) = sum over r-tuples j in [0, upper_a)^r of
        (-1)^|j| chi(j_1)...chi(j_r) q^((n-i+1)|j|) [|j|]_q^i,

    an exact finite sum evaluated by enumerating every tuple, with 0^0 = 1
    at |j| = 0, i = 0.  Requires 0 <= i <= n."""
    if not 0 <= i <= n:
        raise DomainError(f"need 0 <= i <= n, got i={i}, n={n}")
    if upper_a < 1:
        raise DomainError(f"upper limit must be positive, got {upper_a}")
    totals = np.arange(r * (upper_a - 1) + 1)
    signs = 1.0 - 2.0 * (totals % 2)
    weights = signs * ctx.q ** ((n - i + 1) * totals) * q_number(totals, ctx) ** i
    chiv = chi.periodic_values(upper_a)
    return char_tuple_sum(chiv, weights, r)


@dataclass(frozen=True)
class SymmetryInstance:
    """Parameter point for one symmetry check.  a and b must be odd for the
    theorems to apply; validation happens at evaluation time so sweeps can
    record the violation instead of aborting."""

    chi: DirichletCharacter
    r: int
    ctx: QContext
    a: int = 1
    b: int = 1
    n: int | None = None
    s: complex | None = None
    m: int | None = None
    x: float = 1.0
    y: float = 0.0

    def require_odd_pair(self) -> None:
        if self.a < 1 or self.a % 2 == 0:
            raise ParityViolation(f"a must be a positive odd integer, got {self.a}")
        if self.b < 1 or self.b % 2 == 0:
            raise ParityViolation(f"b must be a positive odd integer, got {self.b}")

    def base_record(self) -> dict:
        return {
            "d": self.chi.modulus_d,
            "chi": self.chi.label,
            "r": self.r,
            "q": self.ctx.q,
        }


def _check_side_budget(d: int, first: int, r: int) -> None:
    if (d * first) ** r > TUPLE_BUDGET:
        raise BudgetExceeded(
            f"side evaluation over ({d}*{first})^{r} tuples exceeds the budget"
        )


def _role_argument(second: int, x: float, first: int, t: int) -> float:
    # b*x + (b/a)*t held as an exact rational until the final conversion
    return float(Fraction(x) * second + Fraction(second * t, first))


def _lfun_side(
    chi: DirichletCharacter,
    r: int,
    s: complex,
    x: float,
    ctx: QContext,
    first: int,
    second: int,
    epsilon: float,
    max_terms: int,
) -> complex:
    """One side of the l-function symmetry in roles (first, second)."""
    d = chi.modulus_d
    _check_side_budget(d, first, r)
    ctx_first = ctx.power(first)
    ctx_second = ctx.power(second)
    weights = bounded_composition_sums(chi, r, d * first)
    total = 0j
    for t, w_t in enumerate(weights):
        arg = _role_argument(second, x, first, t)
        spec = LfunSpec.create(chi, r, s, arg, ctx_first, epsilon, max_terms)
        total += w_t * (-1.0) ** t * ctx.q ** (second * t) * lfun_eval(spec)
    bracket_pow = cmath.exp(complex(s) * math.log(q_number(second, ctx)))
    return q_bracket_two_pow(r, ctx_second) * bracket_pow * total


def _poly_side(
    chi: DirichletCharacter,
    r: int,
    n: int,
    x: float,
    ctx: QContext,
    first: int,
    second: int,
    epsilon: float,
    max_terms: int,
) -> complex:
    """One side of the polynomial symmetry in roles (first, second)."""
    d = chi.modulus_d
    _check_side_budget(d, first, r)
    ctx_first = ctx.power(first)
    ctx_second = ctx.power(second)
    weights = bounded_composition_sums(chi, r, d * first)
    total = 0j
    for t, w_t in enumerate(weights):
        arg = _role_argument(second, x, first, t)
        spec = QEulerSpec.create(chi, r, n, arg, ctx_first, epsilon, max_terms)
        total += w_t * (-1.0) ** t * ctx.q ** (second * t) * qeuler_poly(spec)
    return q_bracket_two_pow(r, ctx_second) * q_number(first, ctx) ** n * total


def _power_sum_side(
    chi: DirichletCharacter,
    r: int,
    n: int,
    x: float,
    ctx: QContext,
    first: int,
    second: int,
    epsilon: float,
    max_terms: int,
) -> complex:
    """One side of the power-sum expansion in roles (first, second)."""
    d = chi.modulus_d
    ctx_first = ctx.power(first)
    ctx_second = ctx.power(second)
    bracket_first = q_number(first, ctx)
    bracket_second = q_number(second, ctx)
    total = 0j
    for i in range(n + 1):
        e_val = qeuler_value(chi, r, n - i, second * x, ctx_first, epsilon, max_terms)
        s_val = power_sum(chi, r, n, i, first * d, ctx_second)
        total += (
            comb(n, i)
            * bracket_first ** (n - i)
            * bracket_second ** i
            * e_val
            * s_val
        )
    return q_bracket_two_pow(r, ctx_second) * total


def _tolerance(rel_tol: float, lhs: complex, rhs: complex) -> float:
    return rel_tol * max(abs(lhs), abs(rhs), 1.0)


def theorem1_sides(
    inst: SymmetryInstance,
    epsilon: float = DEFAULT_EPSILON,
    max_terms: int = DEFAULT_MAX_TERMS,
    rel_tol: float = DEFAULT_REL_TOL,
) -> IdentityReport:
    """l-function symmetry: both sides at complex exponent inst.s, x > 0."""
    inst.require_odd_pair()
    if inst.s is None:
        raise DomainError("theorem1_sides needs the exponent s")
    if inst.x <= 0.0:
        raise DomainError(f"x must be strictly positive, got {inst.x}")
    start = time.perf_counter()
    lhs = _lfun_side(inst.chi, inst.r, inst.s, inst.x, inst.ctx,
                     inst.a, inst.b, epsilon, max_terms)
    rhs = _lfun_side(inst.chi, inst.r, inst.s, inst.x, inst.ctx,
                     inst.b, inst.a, epsilon, max_terms)
    elapsed = time.perf_counter() - start
    instance = inst.base_record() | {
        "a": inst.a, "b": inst.b, "s": complex(inst.s), "x": inst.x,
    }
    return make_report("T1", instance, lhs, rhs, _tolerance(rel_tol, lhs, rhs), elapsed)


def theorem2_sides(
    inst: SymmetryInstance,
    epsilon: float = DEFAULT_EPSILON,
    max_terms: int = DEFAULT_MAX_TERMS,
    rel_tol: float = DEFAULT_REL_TOL,
) -> IdentityReport:
    """Polynomial symmetry at integer degree inst.n, x >= 0."""
    inst.require_odd_pair()
    if inst.n is None or inst.n < 0:
        raise DomainError(f"theorem2_sides needs a nonnegative degree, got {inst.n}")
    start = time.perf_counter()
    lhs = _poly_side(inst.chi, inst.r, inst.n, inst.x, inst.ctx,
                     inst.a, inst.b, epsilon, max_terms)
    rhs = _poly_side(inst.chi, inst.r, inst.n, inst.x, inst.ctx,
                     inst.b, inst.a, epsilon, max_terms)
    elapsed = time.perf_counter() - start
    instance = inst.base_record() | {
        "a": inst.a, "b": inst.b, "n": inst.n, "x": inst.x,
    }
    return make_report("T2", instance, lhs, rhs, _tolerance(rel_tol, lhs, rhs), elapsed)


def theorem3_sides(
    inst: SymmetryInstance,
    epsilon: float = DEFAULT_EPSILON,
    max_terms: int = DEFAULT_MAX_TERMS,
    rel_tol: float = DEFAULT_REL_TOL,
) -> IdentityReport:
    """Power-sum symmetry: both orientations of the binomial expansion."""
    inst.require_odd_pair()
    if inst.n is None or inst.n < 0:
        raise DomainError(f"theorem3_sides needs a nonnegative degree, got {inst.n}")
    start = time.perf_counter()
    lhs = _power_sum_side(inst.chi, inst.r, inst.n, inst.x, inst.ctx,
                          inst.a, inst.b, epsilon, max_terms)
    rhs = _power_sum_side(inst.chi, inst.r, inst.n, inst.x, inst.ctx,
                          inst.b, inst.a, epsilon, max_terms)
    elapsed = time.perf_counter() - start
    instance = inst.base_record() | {
        "a": inst.a, "b": inst.b, "n": inst.n, "x": inst.x,
    }
    return make_report("T3", instance, lhs, rhs, _tolerance(rel_tol, lhs, rhs), elapsed)


def eq12_bridge(
    inst: SymmetryInstance,
    epsilon: float = DEFAULT_EPSILON,
    max_terms: int = DEFAULT_MAX_TERMS,
    rel_tol: float = BRIDGE_REL_TOL,
    mirrored: bool = False,
) -> IdentityReport:
    """Polynomial form against power-sum form in one orientation.

    This validates the rearrangement that converts the j-sum of shifted
    polynomial values into binomially weighted power sums.  With
    mirrored=True the roles of a and b are exchanged first, giving the
    mirror-orientation check."""
    inst.require_odd_pair()
    if inst.n is None or inst.n < 0:
        raise DomainError(f"eq12_bridge needs a nonnegative degree, got {inst.n}")
    first, second = (inst.b, inst.a) if mirrored else (inst.a, inst.b)
    start = time.perf_counter()
    lhs = _poly_side(inst.chi, inst.r, inst.n, inst.x, inst.ctx,
                     first, second, epsilon, max_terms)
    rhs = _power_sum_side(inst.chi, inst.r, inst.n, inst.x, inst.ctx,
                          first, second, epsilon, max_terms)
    elapsed = time.perf_counter() - start
    instance = inst.base_record() | {
        "a": inst.a, "b": inst.b, "n": inst.n, "x": inst.x,
    }
    identity_id = "EQ13" if mirrored else "EQ12"
    return make_report(identity_id, instance, lhs, rhs,
                       _tolerance(rel_tol, lhs, rhs), elapsed)


def eq15_sides(
    chi: DirichletCharacter,
    r: int,
    m: int,
    n: int,
    x: float,
    y: float,
    ctx: QContext,
    epsilon: float = DEFAULT_EPSILON,
    max_terms: int = DEFAULT_MAX_TERMS,
    rel_tol: float = DEFAULT_REL_TOL,
) -> IdentityReport:
    """Two-index shift symmetry between degrees m and n:

        sum_{k<=m} binom(m,k) q^(kx) E_{n+k}(y) [x]_q^(m-k)
      = sum_{k<=n} binom(n,k) q^(-kx) E_{m+k}(x+y) [-x]_q^(n-k).

    At x = 0 both sides collapse to E_{m+n}(y) through the same evaluation,
    so the residual vanishes identically."""
    if m < 0 or n < 0:
        raise DomainError(f"degrees must be nonnegative, got m={m}, n={n}")
    if x < 0.0 or y < 0.0:
        raise DomainError(f"arguments must be nonnegative, got x={x}, y={y}")
    start = time.perf_counter()
    bracket_x = q_number(x, ctx)
    bracket_neg_x = q_number(-x, ctx)
    lhs = 0j
    for k in range(m + 1):
        e_val = qeuler_value(chi, r, n + k, y, ctx, epsilon, max_terms)
        lhs += comb(m, k) * ctx.q ** (k * x) * e_val * bracket_x ** (m - k)
    rhs = 0j
    for k in range(n + 1):
        e_val = qeuler_value(chi, r, m + k, x + y, ctx, epsilon, max_terms)
        rhs += comb(n, k) * ctx.q ** (-k * x) * e_val * bracket_neg_x ** (n - k)
    elapsed = time.perf_counter() - start
    instance = {
        "d": chi.modulus_d, "chi": chi.label, "r": r, "q": ctx.q,
        "m": m, "n": n, "x": x, "y": y,
    }
    return make_report("EQ15", instance, lhs, rhs,
                       _tolerance(rel_tol, lhs, rhs), elapsed)


def _addition_report(
    inst: SymmetryInstance,
    identity_id: str,
    epsilon: float,
    max_terms: int,
    rel_tol: float,
) -> IdentityReport:
    """Shift expansion against direct evaluation; y = 0 gives the expansion
    through the q-Euler numbers."""
    if inst.n is None or inst.n < 0:
        raise DomainError(f"{identity_id} needs a nonnegative degree, got {inst.n}")
    y = 0.0 if identity_id == "EQ5" else inst.y
    start = time.perf_counter()
    lhs = qeuler_addition(inst.chi, inst.r, inst.n, inst.ctx, inst.x, y,
                          epsilon, max_terms)
    rhs = qeuler_value(inst.chi, inst.r, inst.n, inst.x + y, inst.ctx,
                       epsilon, max_terms)
    elapsed = time.perf_counter() - start
    instance = inst.base_record() | {"n": inst.n, "x": inst.x}
    if identity_id == "EQ9":
        instance["y"] = y
    return make_report(identity_id, instance, lhs, rhs,
                       _tolerance(rel_tol, lhs, rhs), elapsed)


@dataclass(frozen=True)
class SweepGrid:
    """Cartesian parameter grid for run_suite; axes irrelevant to an identity
    are ignored.  chi_labels=None selects every character of each modulus."""

    d_values: tuple[int, ...]
    q_values: tuple[float, ...]
    r_values: tuple[int, ...] = (1,)
    chi_labels: tuple[int, ...] | None = None
    ab_pairs: tuple[tuple[int, int], ...] = ((1, 1),)
    n_values: tuple[int, ...] = (0,)
    s_values: tuple[complex, ...] = ()
    m_values: tuple[int, ...] = (0,)
    x_values: tuple[float, ...] = (1.0,)
    y_values: tuple[float, ...] = (0.0,)
    tol: float = 1e-9


def _grid_instances(identity_id: str, grid: SweepGrid):
    """Deterministic enumeration: d, chi, r, q, (a, b), degree axes, x, y."""
    uses_ab = identity_id in ("T1", "T2", "T3", "EQ12", "EQ13")
    uses_y = identity_id in ("EQ9", "EQ15")
    for d in grid.d_values:
        group = build_character_group(d)
        labels = grid.chi_labels if grid.chi_labels is not None else range(len(group))
        for label in labels:
            chi = group[label]
            for r in grid.r_values:
                for q in grid.q_values:
                    ctx = QContext(q, grid.tol)
                    ab_list = grid.ab_pairs if uses_ab else ((1, 1),)
                    for a, b in ab_list:
                        if identity_id == "T1":
                            degree_axis = [("s", s) for s in grid.s_values]
                        elif identity_id == "EQ15":
                            degree_axis = [("mn", (m, n)) for m in grid.m_values
                                           for n in grid.n_values]
                        else:
                            degree_axis = [("n", n) for n in grid.n_values]
                        for kind, value in degree_axis:
                            for x in grid.x_values:
                                y_list = grid.y_values if uses_y else (0.0,)
                                for y in y_list:
                                    kwargs = dict(chi=chi, r=r, ctx=ctx,
                                                  a=a, b=b, x=x, y=y)
                                    if kind == "s":
                                        kwargs["s"] = complex(value)
                                    elif kind == "mn":
                                        kwargs["m"], kwargs["n"] = value
                                    else:
                                        kwargs["n"] = value
                                    yield SymmetryInstance(**kwargs)


def _evaluate_instance(
    identity_id: str,
    inst: SymmetryInstance,
    epsilon: float,
    max_terms: int,
    rel_tol: float | None,
) -> IdentityReport:
    rel = rel_tol if rel_tol is not None else (
        BRIDGE_REL_TOL if identity_id in ("EQ12", "EQ13") else DEFAULT_REL_TOL
    )
    try:
        if identity_id == "T1":
            return theorem1_sides(inst, epsilon, max_terms, rel)
        if identity_id == "T2":
            return theorem2_sides(inst, epsilon, max_terms, rel)
        if identity_id == "T3":
            return theorem3_sides(inst, epsilon, max_terms, rel)
        if identity_id == "EQ12":
            return eq12_bridge(inst, epsilon, max_terms, rel, mirrored=False)
        if identity_id == "EQ13":
            return eq12_bridge(inst, epsilon, max_terms, rel, mirrored=True)
        if identity_id == "EQ4":
            tol = rel_tol if rel_tol is not None else 1e-8
            return verify_interpolation(inst.chi, inst.r, inst.n, inst.x,
                                        inst.ctx, tol, max_terms)
        if identity_id in ("EQ5", "EQ9"):
            return _addition_report(inst, identity_id, epsilon, max_terms, rel)
        if identity_id == "EQ15":
            return eq15_sides(inst.chi, inst.r, inst.m, inst.n, inst.x, inst.y,
                              inst.ctx, epsilon, max_terms, rel)
        raise DomainError(f"unknown identity id {identity_id!r}")
    except (DomainError, ParityViolation, BudgetExceeded) as exc:
        record = inst.base_record() | {"a": inst.a, "b": inst.b}
        if inst.n is not None:
            record["n"] = inst.n
        if inst.s is not None:
            record["s"] = complex(inst.s)
        if inst.m is not None:
            record["m"] = inst.m
        record["x"] = inst.x
        return make_error_report(identity_id, record, 0.0, exc)


def run_suite(
    identity_id: str,
    grid: SweepGrid,
    epsilon: float = DEFAULT_EPSILON,
    max_terms: int = DEFAULT_MAX_TERMS,
    rel_tol: float | None = None,
    workers: int = 1,
) -> list[IdentityReport]:
    """Evaluate one identity over the whole grid.

    Instances are independent pure evaluations, so they may run on several
    threads; reports always come back in enumeration order and per-instance
    errors are recorded in place rather than aborting the sweep."""
    instances = list(_grid_instances(identity_id, grid))
    if workers > 1 and len(instances) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(
                lambda inst: _evaluate_instance(identity_id, inst, epsilon,
                                                max_terms, rel_tol),
                instances,
            ))
    return [
        _evaluate_instance(identity_id, inst, epsilon, max_terms, rel_tol)
        for inst in instances
    ]
