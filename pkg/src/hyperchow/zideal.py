"""Homogeneous ideals in Z[x_1..x_n]: strong Groebner bases and canonical normal forms.

Over Z a Groebner basis in the weak sense does not give unique remainders, so
bases here are *strong*: every leading term of an ideal element is divisible,
coefficient included, by the leading term of some basis element. They are
computed with Buchberger's algorithm extended by GCD-polynomials. Normal forms
reduce every coefficient into the residue range ``[0, lc)`` of the matching
basis element, which makes them unique and turns membership into a single
reduction.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Sequence

from .exactpoly import Monomial, Polynomial, RingMismatchError, RingSpec, parse

TERM_ORDER = "weighted-deglex"


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (d, s, t) with s*a + t*b = d = gcd(a, b) >= 0."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        a, s0, t0 = -a, -s0, -t0
    return a, s0, t0


def _divides(m1: Monomial, m2: Monomial) -> bool:
    return all(a <= b for a, b in zip(m1, m2))


def _lcm(m1: Monomial, m2: Monomial) -> Monomial:
    return tuple(max(a, b) for a, b in zip(m1, m2))


def _quot(m1: Monomial, m2: Monomial) -> Monomial:
    return tuple(a - b for a, b in zip(m1, m2))


def _positive(p: Polynomial) -> Polynomial:
    return -p if p.lc < 0 else p


@dataclass(frozen=True)
class IdealZ:
    ring: RingSpec
    generators: tuple[Polynomial, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "generators", tuple(self.generators))
        for g in self.generators:
            if g.ring != self.ring:
                raise RingMismatchError(f"generator {g} is not in {self.ring}")
            if not g:
                raise ValueError("ideal generators must be nonzero")
            if not g.is_homogeneous():
                raise ValueError(f"generator {g} is not homogeneous")

    @classmethod
    def of(cls, gens: Sequence[Polynomial], ring: RingSpec | None = None) -> "IdealZ":
        """Build from a list, silently dropping zero generators."""
        gens = [g for g in gens if g]
        if ring is None:
            if not gens:
                raise ValueError("cannot infer the ring of an empty ideal")
            ring = gens[0].ring
        return cls(ring, tuple(gens))


@dataclass(frozen=True)
class StrongGroebnerBasis:
    ideal: IdealZ
    basis: tuple[Polynomial, ...]
    term_order: str = TERM_ORDER

    def normal_form(self, p: Polynomial) -> Polynomial:
        return normal_form(p, self)

    def contains(self, p: Polynomial) -> bool:
        return not normal_form(p, self)


def _reduce(p: Polynomial, basis: Sequence[Polynomial]) -> Polynomial:
    # basis elements must have positive leading coefficients
    ring = p.ring
    key = ring.sort_key
    heads = [(g.leading_term(), g) for g in basis]
    work = p.as_dict()
    rem: dict[Monomial, int] = {}
    while work:
        m = max(work, key=key)
        c = work.pop(m)
        best = None
        for (gm, gc), g in heads:
            if _divides(gm, m) and (best is None or gc < best[1]):
                best = (gm, gc, g)
        if best is None:
            rem[m] = c
            continue
        gm, gc, g = best
        q, r = divmod(c, gc)
        if q:
            shift = _quot(m, gm)
            for tm, tc in g.as_dict().items():
                if tm == gm:
                    continue
                tm = tuple(a + b for a, b in zip(tm, shift))
                v = work.get(tm, 0) - q * tc
                if v:
                    work[tm] = v
                else:
                    work.pop(tm, None)
        if r:
            rem[m] = r
    return Polynomial(ring, rem)


def _spoly(f: Polynomial, g: Polynomial) -> Polynomial:
    (fm, fc), (gm, gc) = f.leading_term(), g.leading_term()
    L = _lcm(fm, gm)
    c = fc * gc // math.gcd(fc, gc)
    return f.mul_term(_quot(L, fm), c // fc) - g.mul_term(_quot(L, gm), c // gc)


def _gpoly(f: Polynomial, g: Polynomial) -> Polynomial:
    (fm, fc), (gm, gc) = f.leading_term(), g.leading_term()
    L = _lcm(fm, gm)
    _, s, t = _ext_gcd(fc, gc)
    return f.mul_term(_quot(L, fm), s) + g.mul_term(_quot(L, gm), t)


def strong_groebner(ideal: IdealZ, order: str = TERM_ORDER) -> StrongGroebnerBasis:
    """Strong Groebner basis of a homogeneous ideal over Z.

    Pairs are processed by increasing weighted degree of their lcm. Both the
    S-polynomial and the GCD-polynomial of every pair are reduced and kept if
    nonzero. The result is minimal (no leading term strongly divides another),
    tail-reduced, sign-normalized and sorted by leading term.
    """
    if order != TERM_ORDER:
        raise ValueError(f"unsupported term order {order!r}")
    ring = ideal.ring
    G: list[Polynomial] = []
    pairs: list[tuple[int, int, int]] = []

    def add(p: Polynomial) -> None:
        p = _positive(p)
        k = len(G)
        G.append(p)
        for i in range(k):
            pairs.append((ring.degree(_lcm(G[i].lm, p.lm)), i, k))

    for f in ideal.generators:
        r = _reduce(f, G)
        if r:
            add(r)

    while pairs:
        pairs.sort()
        _, i, j = pairs.pop(0)
        f, g = G[i], G[j]
        fc, gc = f.lc, g.lc
        candidates = [_spoly(f, g)]
        if fc % gc and gc % fc:
            candidates.append(_gpoly(f, g))
        for cand in candidates:
            r = _reduce(cand, G)
            if r:
                add(r)

    # minimalize: drop elements whose leading term is strongly divisible by another's
    keep: list[Polynomial] = []
    for idx, g in enumerate(G):
        gm, gc = g.leading_term()
        redundant = False
        for jdx, h in enumerate(G):
            if jdx == idx:
                continue
            hm, hc = h.leading_term()
            if _divides(hm, gm) and gc % hc == 0:
                # among equal leading terms keep the earliest
                if (hm, hc) != (gm, gc) or jdx < idx:
                    redundant = True
                    break
        if not redundant:
            keep.append(g)

    final = []
    for g in keep:
        gm, gc = g.leading_term()
        head = Polynomial(ring, {gm: gc})
        others = [h for h in keep if h is not g]
        final.append(head + _reduce(g - head, others))
    final.sort(key=lambda p: (ring.sort_key(p.lm), p.lc))
    return StrongGroebnerBasis(ideal, tuple(final), order)


def normal_form(p: Polynomial, gb: StrongGroebnerBasis) -> Polynomial:
    """Unique remainder of ``p`` modulo the ideal; zero iff ``p`` is a member."""
    if p.ring != gb.ideal.ring:
        raise RingMismatchError(f"{p.ring} != {gb.ideal.ring}")
    return _reduce(p, gb.basis)


def is_member(p: Polynomial, gens: Sequence[Polynomial]) -> bool:
    gens = [g for g in gens if g]
    if not gens:
        return not p
    return not normal_form(p, strong_groebner(IdealZ(p.ring, tuple(gens))))


@dataclass(frozen=True)
class MembershipCertificate:
    """Claim that ``sum(cofactors[i] * generators[i]) == target`` exactly."""

    target: Polynomial
    generators: tuple[Polynomial, ...]
    cofactors: tuple[Polynomial, ...]
    name: str = ""
    generator_names: tuple[str, ...] = field(default=())

    def __post_init__(self) -> None:
        object.__setattr__(self, "generators", tuple(self.generators))
        object.__setattr__(self, "cofactors", tuple(self.cofactors))
        object.__setattr__(self, "generator_names", tuple(self.generator_names))

    def combination(self, gens: Sequence[Polynomial] | None = None) -> Polynomial:
        gens = self.generators if gens is None else tuple(gens)
        if len(gens) != len(self.cofactors):
            raise ValueError(f"{len(self.cofactors)} cofactors for {len(gens)} generators")
        total = self.target.ring.zero()
        for c, g in zip(self.cofactors, gens):
            total = total + c * g
        return total

    def verify(self) -> bool:
        return verify_certificate(self, self.generators)

    def to_json(self) -> dict:
        out = {
            "target": str(self.target),
            "generators": [str(g) for g in self.generators],
            "cofactors": [str(c) for c in self.cofactors],
        }
        if self.name:
            out["name"] = self.name
        if self.generator_names:
            out["generator_names"] = list(self.generator_names)
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    @classmethod
    def from_json(cls, ring: RingSpec, data: dict) -> "MembershipCertificate":
        return cls(
            parse(ring, data["target"]),
            tuple(parse(ring, s) for s in data["generators"]),
            tuple(parse(ring, s) for s in data["cofactors"]),
            data.get("name", ""),
            tuple(data.get("generator_names", ())),
        )


def verify_certificate(cert: MembershipCertificate, gens: Sequence[Polynomial]) -> bool:
    """True iff the cofactors combine ``gens`` into exactly ``cert.target``."""
    return cert.combination(gens) == cert.target
