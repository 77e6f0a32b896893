from __future__ import annotations

import itertools
import math

import pytest
import sympy

from hyperchow.exactpoly import Polynomial, RingSpec
from hyperchow.zlattice import solve_in_lattice


def lattice_member(p: Polynomial, gens) -> bool:
    """Membership of a homogeneous p by integer linear algebra in its degree.

    Independent of the Groebner code: the degree-d part of the ideal is the
    Z-span of m*g over generators g and monomials m of complementary degree.
    """
    if not p:
        return True
    ring = p.ring
    d = p.weighted_degree()
    cols = ring.monomials_of_degree(d)
    index = {m: k for k, m in enumerate(cols)}
    rows = []
    for g in gens:
        if not g:
            continue
        e = g.weighted_degree()
        if e > d:
            continue
        for m in ring.monomials_of_degree(d - e):
            row = [0] * len(cols)
            for mono, c in g.mul_term(m, 1).as_dict().items():
                row[index[mono]] = c
            rows.append(row)
    target = [p.coefficient(m) for m in cols]
    if not rows:
        return not any(target)
    return solve_in_lattice(target, rows) is not None


def brute_order(v, rows, bound):
    """Least a in 1..bound with a*v an integer combination of rows (2 rows x 2 cols, or 1 col)."""
    k = len(v)
    for a in range(1, bound + 1):
        target = [a * x for x in v]
        if k == 1:
            gg = math.gcd(*(r[0] for r in rows))
            if (gg == 0 and target[0] == 0) or (gg and target[0] % gg == 0):
                return a
            continue
        # rows span a full-rank sublattice; search a bounded box of combinations
        if _in_span_2d(target, rows):
            return a
    return None


def _in_span_2d(target, rows):
    base = None
    for i, j in itertools.combinations(range(len(rows)), 2):
        det = rows[i][0] * rows[j][1] - rows[i][1] * rows[j][0]
        if det:
            base = (i, j, det)
            break
    assert base is not None
    i, j, det = base
    extra = [r for k, r in enumerate(rows) if k not in (i, j)]
    box = range(abs(det))  # det * Z^2 lies in span(rows[i], rows[j])
    for coeffs in itertools.product(box, repeat=len(extra)):
        t0 = target[0] - sum(c * r[0] for c, r in zip(coeffs, extra))
        t1 = target[1] - sum(c * r[1] for c, r in zip(coeffs, extra))
        x_num = t0 * rows[j][1] - t1 * rows[j][0]
        y_num = rows[i][0] * t1 - rows[i][1] * t0
        if x_num % det == 0 and y_num % det == 0:
            return True
    return False


def to_sympy(p: Polynomial):
    syms = sympy.symbols(p.ring.names)
    return sum(
        (c * sympy.Mul(*[s**e for s, e in zip(syms, m)]) for m, c in p.as_dict().items()),
        sympy.Integer(0),
    )


def from_sympy(expr, ring: RingSpec) -> Polynomial:
    syms = sympy.symbols(ring.names)
    poly = sympy.Poly(sympy.expand(expr), *syms)
    return Polynomial(ring, {tuple(m): int(c) for m, c in poly.terms()})


@pytest.fixture
def L():
    return RingSpec.of(("l1", 1), ("l2", 1))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    from test_acceptance import ACCEPTANCE_KEY

    lines = config.stash.get(ACCEPTANCE_KEY, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
