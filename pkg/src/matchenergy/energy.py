"""Matching energy (root sum and Coulson-type integral) and graph energy."""

from __future__ import annotations

import json
import logging
import math
import sys
from dataclasses import dataclass
from fractions import Fraction
import heapq

import numpy as np

from .graph import Graph
from .matchcount import MatchVector, match_vector

log = logging.getLogger(__name__)

ROOTS_TOL = 1e-9
QUAD_TOL = 1e-6
SPECTRUM_TOL = 1e-10


@dataclass(frozen=True)
class EnergyResult:
    value: float
    method: str
    abs_error_bound: float

    def to_json(self) -> str:
        return json.dumps({
            "value": float(f"{self.value:.12g}"),
            "method": self.method,
            "abs_error_bound": float(f"{self.abs_error_bound:.12g}"),
        })


# Exact polynomial arithmetic.  Polynomials are lists of Fractions, lowest
# degree first, with no trailing zeros (the zero polynomial is []).

def _trim(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def _deriv(p: list) -> list:
    return _trim([i * c for i, c in enumerate(p)][1:])


def _divmod(a: list, b: list) -> tuple[list, list]:
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = b[-1]
    while len(a) >= len(b) and a:
        shift = len(a) - len(b)
        c = a[-1] / lead
        q[shift] = c
        for i, bc in enumerate(b):
            a[shift + i] -= c * bc
        a.pop()
        _trim(a)
    return _trim(q), a


def _monic(p: list) -> list:
    return [c / p[-1] for c in p]


def _gcd(a: list, b: list) -> list:
    while b:
        a, b = b, _divmod(a, b)[1]
    return _monic(a)


def _squarefree(p: list) -> list[tuple[list, int]]:
    """Yun's algorithm: p = lead * prod f_i^i with each f_i square-free."""
    if len(p) <= 1:
        return []
    dp = _deriv(p)
    a = _gcd(p, dp)
    b = _divmod(p, a)[0]
    c = _divmod(dp, a)[0]
    d = _trim([x - y for x, y in _zip_pad(c, _deriv(b))])
    out = []
    i = 1
    while len(b) > 1:
        a = _gcd(b, d) if d else _monic(b)
        if len(a) > 1:
            out.append((a, i))
        b = _divmod(b, a)[0]
        c = _divmod(d, a)[0] if d else []
        d = _trim([x - y for x, y in _zip_pad(c, _deriv(b))])
        i += 1
    return out


def _zip_pad(a: list, b: list):
    for i in range(max(len(a), len(b))):
        yield (a[i] if i < len(a) else 0), (b[i] if i < len(b) else 0)


def _integer_coeffs(p: list) -> list[int]:
    den = math.lcm(*(c.denominator for c in p))
    return [int(c * den) for c in p]


def _sign_at(ip: list[int], x: Fraction) -> int:
    # Exact sign of sum ip[i] x^i using x = num/den cleared of denominators.
    num, den = x.numerator, x.denominator
    d = len(ip) - 1
    total = 0
    for i, c in enumerate(ip):
        if c:
            total += c * num ** i * den ** (d - i)
    return (total > 0) - (total < 0)


def _root_bound(p: list) -> Fraction:
    return 1 + max(abs(c / p[-1]) for c in p[:-1])


def _sturm_chain(p: list) -> list[list]:
    chain = [p, _deriv(p)]
    while chain[-1] and len(chain[-1]) > 1:
        r = _divmod(chain[-2], chain[-1])[1]
        if not r:
            break
        chain.append([-c for c in r])
    return [_integer_coeffs(q) for q in chain if q]


def _variations(chain: list[list[int]], x: Fraction) -> int:
    signs = [s for s in (_sign_at(q, x) for q in chain) if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_real_roots(p: list, lo: Fraction, hi: Fraction) -> int:
    """Distinct real roots of the square-free ``p`` in (lo, hi] (Sturm)."""
    chain = _sturm_chain(p)
    return _variations(chain, lo) - _variations(chain, hi)


def _sturm_isolate(p: list) -> list[tuple[Fraction, Fraction]]:
    chain = _sturm_chain(p)
    ip = chain[0]
    out = []
    stack = [(Fraction(0), _root_bound(p))]
    while stack:
        lo, hi = stack.pop()
        count = _variations(chain, lo) - _variations(chain, hi)
        if count == 0:
            continue
        if count == 1 and _sign_at(ip, lo) * _sign_at(ip, hi) < 0:
            out.append((lo, hi))
            continue
        if count == 1 and _sign_at(ip, hi) == 0:
            out.append((hi, hi))
            continue
        mid = (lo + hi) / 2
        stack.append((mid, hi))
        stack.append((lo, mid))
    return sorted(out)


def _isolate(p: list) -> list[tuple[Fraction, Fraction]]:
    """Brackets, each holding one root, for a square-free ``p`` with only positive roots.

    Companion-matrix eigenvalues propose the brackets; exact sign changes at
    every bracket end certify them.  Falls back to Sturm bisection if the
    eigenvalues are too rough to certify.
    """
    deg = len(p) - 1
    ip = _integer_coeffs(p)
    if deg == 1:
        r = -p[0] / p[1]
        return [(r, r)]
    approx = np.sort(np.roots([float(c) for c in reversed(_monic(p))]).real)
    cuts = [Fraction(0)]
    cuts += [Fraction(float((a + b) / 2)) for a, b in zip(approx, approx[1:])]
    cuts.append(_root_bound(p))
    signs = [_sign_at(ip, c) for c in cuts]
    if all(cuts[i] < cuts[i + 1] for i in range(deg)) and \
            all(signs[i] * signs[i + 1] < 0 for i in range(deg)):
        return list(zip(cuts, cuts[1:]))
    log.debug("companion brackets not certified, using Sturm isolation")
    return _sturm_isolate(p)


def _polish(ip: list[int], lo: Fraction, hi: Fraction, tol: float) -> tuple[Fraction, Fraction]:
    if lo == hi:
        return lo, hi
    s_lo = _sign_at(ip, lo)
    for _ in range(400):
        if math.sqrt(hi) - math.sqrt(lo) <= tol:
            break
        mid = (lo + hi) / 2
        s = _sign_at(ip, mid)
        if s == 0:
            return mid, mid
        if s == s_lo:
            lo = mid
        else:
            hi = mid
    return lo, hi


def even_part(mv: MatchVector) -> list[Fraction]:
    """sum_t (-1)^t m(G,t) y^(n//2 - t), lowest degree first."""
    top = len(mv.counts) - 1
    return [Fraction((-1) ** (top - j) * mv.counts[top - j]) for j in range(top + 1)]


def _positive_part(mv: MatchVector) -> list[Fraction]:
    # Divide out y^(n//2 - nu); what remains has nonzero constant term.
    nu = mv.matching_number
    return even_part(mv)[len(mv.counts) - 1 - nu:]


def even_part_roots(mv: MatchVector, tol: float = 1e-13) -> list[tuple[Fraction, Fraction, int]]:
    """Certified brackets (lo, hi, multiplicity) around the positive roots in y."""
    out = []
    for factor, mult in _squarefree(_positive_part(mv)):
        ip = _integer_coeffs(factor)
        for lo, hi in _isolate(factor):
            lo, hi = _polish(ip, lo, hi, tol)
            out.append((lo, hi, mult))
    return sorted(out)


def is_real_rooted(mv: MatchVector) -> bool:
    """Exact check that every root of the even part is real and nonnegative."""
    p = _positive_part(mv)
    for factor, _ in _squarefree(p):
        deg = len(factor) - 1
        bound = _root_bound(factor)
        if count_real_roots(factor, Fraction(0), bound) != deg:
            return False
    return True


def matching_energy_roots(mv: MatchVector) -> EnergyResult:
    """ME = 2 * sum sqrt(y_i) over the roots y_i of the even part."""
    total = 0.0
    err = 0.0
    for lo, hi, mult in even_part_roots(mv):
        a, b = math.sqrt(lo), math.sqrt(hi)
        total += mult * (a + b)
        err += mult * (b - a)
    err += 4 * sys.float_info.epsilon * total
    return EnergyResult(total, "roots", err)


def coulson_integrand(mv: MatchVector):
    """x -> ln(sum_t m(G,t) x^(2t)) / x^2, continuously extended by e(G) at 0."""
    c = np.array([float(x) for x in mv.counts[1:]])

    def f(x):
        x = np.asarray(x, dtype=float)
        x2 = x * x
        s = np.zeros_like(x2)
        for coef in c[::-1]:
            s = (s + coef) * x2
        with np.errstate(divide="ignore", invalid="ignore"):
            val = np.log1p(s) / x2
        return np.where(x2 == 0, c[0] if len(c) else 0.0, val)

    return f


def _reflected_integrand(mv: MatchVector):
    # After x -> 1/u the tail integrand is ln(sum_t m(G,t) u^(2(nu-t))) - 2 nu ln u;
    # the -2 nu ln u part integrates to 2 nu on [0, 1].
    nu = mv.matching_number
    c = np.array([float(mv.counts[nu - j]) for j in range(nu + 1)])

    def g(u):
        u2 = np.asarray(u, dtype=float) ** 2
        s = np.zeros_like(u2)
        for coef in c[::-1]:
            s = s * u2 + coef
        return np.log(s)

    return g, 2.0 * nu


_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(10)


def _gl(f, a: float, b: float) -> float:
    half = 0.5 * (b - a)
    return half * float(np.dot(_GL_WEIGHTS, f(a + half * (_GL_NODES + 1))))


def adaptive_quad(f, a: float, b: float, tol: float, max_intervals: int = 2000) -> tuple[float, float, bool]:
    """Globally adaptive Gauss-Legendre quadrature.

    Each interval's error is estimated as the gap between its one-panel value
    and the sum over its two halves; the worst interval is split until the
    summed estimate falls below ``tol`` or ``max_intervals`` is hit.
    Returns (value, error estimate, converged).
    """

    def panel(lo, hi):
        mid = 0.5 * (lo + hi)
        whole = _gl(f, lo, hi)
        halves = _gl(f, lo, mid) + _gl(f, mid, hi)
        return halves, abs(halves - whole)

    val, err = panel(a, b)
    heap = [(-err, a, b, val)]
    total_err = err
    while total_err > tol and len(heap) < max_intervals:
        neg, lo, hi, _ = heapq.heappop(heap)
        total_err += neg
        mid = 0.5 * (lo + hi)
        for x, y in ((lo, mid), (mid, hi)):
            v, e = panel(x, y)
            heapq.heappush(heap, (-e, x, y, v))
            total_err += e
    value = math.fsum(item[3] for item in heap)
    total_err = math.fsum(-item[0] for item in heap)
    return value, total_err, total_err <= tol


def matching_energy_quadrature(mv: MatchVector, tol: float = QUAD_TOL) -> EnergyResult:
    """(2/pi) * integral over [0, inf) of the Coulson-type integrand.

    [0, 1] is integrated directly; [1, inf) is folded back onto [0, 1].
    """
    if mv.matching_number == 0:
        return EnergyResult(0.0, "quadrature", 0.0)
    inner_tol = tol * 1e-4
    head, e1, ok1 = adaptive_quad(coulson_integrand(mv), 0.0, 1.0, inner_tol / 2)
    g, shift = _reflected_integrand(mv)
    tail, e2, ok2 = adaptive_quad(g, 0.0, 1.0, inner_tol / 2)
    scale = 2.0 / math.pi
    value = scale * (head + shift + tail)
    bound = scale * (e1 + e2)
    if not (ok1 and ok2):
        log.warning("quadrature budget exceeded; error estimate %.3g", bound)
        bound = max(bound, tol) * 10
    else:
        bound = max(bound, 1e-12)
    return EnergyResult(value, "quadrature", bound)


def graph_energy(g: Graph) -> EnergyResult:
    """Sum of absolute adjacency eigenvalues."""
    if g.n == 0:
        return EnergyResult(0.0, "spectrum", 0.0)
    eig = np.linalg.eigvalsh(g.adjacency_matrix())
    return EnergyResult(float(np.abs(eig).sum()), "spectrum", SPECTRUM_TOL)


def matching_energy(g: Graph, cache=None) -> EnergyResult:
    return matching_energy_roots(match_vector(g, cache))


def tree_equality_check(g: Graph, tol: float = 1e-8) -> bool:
    """True iff matching energy and graph energy of the tree agree within ``tol``."""
    if not g.is_tree():
        raise ValueError("input is not a tree")
    me = matching_energy(g)
    e = graph_energy(g)
    return abs(me.value - e.value) <= tol + me.abs_error_bound + e.abs_error_bound
