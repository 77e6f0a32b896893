"""Sparse multivariate polynomials with integer coefficients over a weighted grading.

A polynomial is a mapping from exponent tuples to nonzero Python ints, tied to a
``RingSpec`` that names the variables and gives each one a positive weight.
Terms are kept in graded-lex order: weighted degree first, then lexicographic
on the exponent vector with the first variable largest.

    >>> R = RingSpec.of(("l1", 1), ("l2", 1))
    >>> l1, l2 = R.gens()
    >>> str((l1 - 3 * l2) * (l1 + 3 * l2))
    'l1^2 - 9 * l2^2'
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence, Tuple

Monomial = Tuple[int, ...]

INHOMOGENEOUS = "inhomogeneous"


class RingMismatchError(ValueError):
    pass


class GradingError(ValueError):
    pass


@dataclass(frozen=True)
class RingSpec:
    names: Tuple[str, ...]
    weights: Tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.names) != len(self.weights):
            raise ValueError("names and weights must have equal length")
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"duplicate variable names in {self.names}")
        for name, w in zip(self.names, self.weights):
            if not isinstance(w, int) or w < 1:
                raise ValueError(f"weight of {name!r} must be a positive integer, got {w!r}")
            if not re.fullmatch(r"[A-Za-z_][A-Za-z_0-9]*", name):
                raise ValueError(f"invalid variable name {name!r}")

    @classmethod
    def of(cls, *pairs: tuple[str, int]) -> "RingSpec":
        return cls(tuple(p[0] for p in pairs), tuple(p[1] for p in pairs))

    @property
    def nvars(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"{name!r} is not a variable of {self}") from None

    def degree(self, mono: Monomial) -> int:
        return sum(e * w for e, w in zip(mono, self.weights))

    def sort_key(self, mono: Monomial) -> tuple:
        return (self.degree(mono), mono)

    def gen(self, name: str) -> "Polynomial":
        mono = [0] * self.nvars
        mono[self.index(name)] = 1
        return Polynomial(self, {tuple(mono): 1})

    def gens(self) -> tuple["Polynomial", ...]:
        return tuple(self.gen(n) for n in self.names)

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def const(self, c: int) -> "Polynomial":
        return Polynomial(self, {(0,) * self.nvars: c})

    def linear(self, coeffs: Sequence[int]) -> "Polynomial":
        """The degree-one form sum(coeffs[i] * var_i); only weight-1 variables allowed."""
        if len(coeffs) != self.nvars:
            raise ValueError("coefficient vector length does not match the ring")
        out = {}
        for i, c in enumerate(coeffs):
            if c:
                if self.weights[i] != 1:
                    raise GradingError(f"{self.names[i]} does not have weight 1")
                mono = [0] * self.nvars
                mono[i] = 1
                out[tuple(mono)] = int(c)
        return Polynomial(self, out)

    def without(self, name: str) -> "RingSpec":
        i = self.index(name)
        return RingSpec(self.names[:i] + self.names[i + 1 :], self.weights[:i] + self.weights[i + 1 :])

    def monomials_of_degree(self, d: int) -> list[Monomial]:
        """All monomials of weighted degree ``d``, in descending term order."""
        out: list[Monomial] = []

        def rec(i: int, left: int, acc: list[int]) -> None:
            if i == self.nvars:
                if left == 0:
                    out.append(tuple(acc))
                return
            w = self.weights[i]
            for e in range(left // w, -1, -1):
                acc.append(e)
                rec(i + 1, left - e * w, acc)
                acc.pop()

        rec(0, d, [])
        out.sort(key=self.sort_key, reverse=True)
        return out

    def to_json(self) -> list[dict]:
        return [{"name": n, "weight": w} for n, w in zip(self.names, self.weights)]

    @classmethod
    def from_json(cls, data: Iterable[Mapping]) -> "RingSpec":
        return cls.of(*((d["name"], int(d["weight"])) for d in data))

    def __str__(self) -> str:
        return "Z[" + ", ".join(self.names) + "]"


def _check_same_ring(p: "Polynomial", q: "Polynomial") -> None:
    if p.ring != q.ring:
        raise RingMismatchError(f"{p.ring} != {q.ring}")


class Polynomial:
    """Immutable polynomial in ``ring`` with exact integer coefficients."""

    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring: RingSpec, terms: Mapping[Monomial, int] | None = None):
        self.ring = ring
        clean: dict[Monomial, int] = {}
        for mono, c in (terms or {}).items():
            if len(mono) != ring.nvars:
                raise ValueError(f"monomial {mono} has wrong length for {ring}")
            if c:
                clean[tuple(mono)] = int(c)
        self._terms = clean
        self._hash: int | None = None

    @classmethod
    def _raw(cls, ring: RingSpec, terms: dict[Monomial, int]) -> "Polynomial":
        # caller guarantees no zero coefficients
        obj = cls.__new__(cls)
        obj.ring = ring
        obj._terms = terms
        obj._hash = None
        return obj

    # -- inspection ---------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def terms(self) -> list[tuple[Monomial, int]]:
        """Terms in descending graded-lex order."""
        key = self.ring.sort_key
        return sorted(self._terms.items(), key=lambda t: key(t[0]), reverse=True)

    def __iter__(self) -> Iterator[tuple[Monomial, int]]:
        return iter(self.terms())

    def coefficient(self, mono: Monomial) -> int:
        return self._terms.get(tuple(mono), 0)

    def as_dict(self) -> dict[Monomial, int]:
        return dict(self._terms)

    def leading_term(self) -> tuple[Monomial, int]:
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        key = self.ring.sort_key
        mono = max(self._terms, key=key)
        return mono, self._terms[mono]

    @property
    def lm(self) -> Monomial:
        return self.leading_term()[0]

    @property
    def lc(self) -> int:
        return self.leading_term()[1]

    def weighted_degree(self) -> int | str:
        """Common weighted degree, or ``INHOMOGENEOUS`` when terms disagree."""
        if not self._terms:
            raise ValueError("the zero polynomial has no degree")
        degs = {self.ring.degree(m) for m in self._terms}
        if len(degs) > 1:
            return INHOMOGENEOUS
        return degs.pop()

    def is_homogeneous(self) -> bool:
        return not self._terms or self.weighted_degree() != INHOMOGENEOUS

    def content(self) -> int:
        return math.gcd(*self._terms.values()) if self._terms else 0

    def linear_coefficients(self) -> list[int]:
        """Coefficient vector of a degree-one form in weight-1 variables."""
        vec = [0] * self.ring.nvars
        for mono, c in self._terms.items():
            if sum(mono) != 1 or self.ring.degree(mono) != 1:
                raise GradingError(f"{self} is not a linear form")
            vec[mono.index(1)] = c
        return vec

    def evaluate(self, point: Sequence[int] | Mapping[str, int]) -> int:
        if isinstance(point, Mapping):
            point = [point[n] for n in self.ring.names]
        if len(point) != self.ring.nvars:
            raise ValueError("point has wrong dimension")
        total = 0
        for mono, c in self._terms.items():
            v = c
            for x, e in zip(point, mono):
                if e:
                    v *= x**e
            total += v
        return total

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            _check_same_ring(self, other)
            return other
        if isinstance(other, int):
            return self.ring.const(other)
        return NotImplemented

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for mono, c in other._terms.items():
            s = out.get(mono, 0) + c
            if s:
                out[mono] = s
            else:
                out.pop(mono, None)
        return Polynomial._raw(self.ring, out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw(self.ring, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        return (-self) + other

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, int):
            if other == 0:
                return self.ring.zero()
            return Polynomial._raw(self.ring, {m: c * other for m, c in self._terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Monomial, int] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        return Polynomial._raw(self.ring, {m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative int")
        result = self.ring.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def mul_term(self, mono: Monomial, c: int) -> "Polynomial":
        """Multiply by the single term ``c * x^mono``."""
        if not c:
            return self.ring.zero()
        return Polynomial._raw(
            self.ring,
            {tuple(a + b for a, b in zip(m, mono)): v * c for m, v in self._terms.items()},
        )

    def exact_div(self, q: "Polynomial") -> "Polynomial":
        """Quotient ``self / q``; raises ``ValueError`` unless ``q`` divides ``self`` over Z."""
        _check_same_ring(self, q)
        if not q:
            raise ZeroDivisionError("division by the zero polynomial")
        qm, qc = q.leading_term()
        rem = self
        quot: dict[Monomial, int] = {}
        while rem:
            m, c = rem.leading_term()
            shift = tuple(a - b for a, b in zip(m, qm))
            if min(shift) < 0 or c % qc:
                raise ValueError(f"{q} does not divide {self}")
            k = c // qc
            quot[shift] = k
            rem = rem - q.mul_term(shift, k)
        return Polynomial(self.ring, quot)

    # -- substitution -------------------------------------------------------

    def substitute(self, var: str, value: "Polynomial") -> "Polynomial":
        """Replace ``var`` by ``value``; the result lives in the ring without ``var``.

        ``value`` must be homogeneous of the same weighted degree as ``var`` so
        that gradings are preserved. It may be given in either the full ring or
        the reduced one.
        """
        i = self.ring.index(var)
        target = self.ring.without(var)
        if value.ring == self.ring:
            if any(m[i] for m in value._terms):
                raise ValueError(f"substituted value still contains {var}")
            value = Polynomial(target, {m[:i] + m[i + 1 :]: c for m, c in value._terms.items()})
        elif value.ring != target:
            raise RingMismatchError(f"value lives in {value.ring}, expected {target}")
        if value and value.weighted_degree() != self.ring.weights[i]:
            raise GradingError(
                f"{var} has weight {self.ring.weights[i]} but value has degree {value.weighted_degree()}"
            )
        powers = [target.const(1)]
        out = target.zero()
        for mono, c in self._terms.items():
            e = mono[i]
            while len(powers) <= e:
                powers.append(powers[-1] * value)
            rest = mono[:i] + mono[i + 1 :]
            out = out + powers[e].mul_term(rest, c)
        return out

    def compose(self, target: RingSpec, images: Mapping[str, "Polynomial"]) -> "Polynomial":
        """Image under the ring map sending each variable to ``images[name]`` in ``target``."""
        imgs = []
        for name, w in zip(self.ring.names, self.ring.weights):
            img = images[name]
            if img.ring != target:
                raise RingMismatchError(f"image of {name} lives in {img.ring}, expected {target}")
            if img and img.weighted_degree() != w:
                raise GradingError(f"image of {name} must have degree {w}")
            imgs.append(img)
        cache: dict[tuple[int, int], Polynomial] = {}

        def power(i: int, e: int) -> Polynomial:
            if (i, e) not in cache:
                cache[(i, e)] = imgs[i] ** e
            return cache[(i, e)]

        out = target.zero()
        for mono, c in self._terms.items():
            term = target.const(c)
            for i, e in enumerate(mono):
                if e:
                    term = term * power(i, e)
            out = out + term
        return out

    # -- comparison / text --------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self == self.ring.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._terms.items())))
        return self._hash

    def __str__(self) -> str:
        return to_text(self)

    def __repr__(self) -> str:
        return f"Polynomial({self.ring}, {to_text(self)!r})"


def _monomial_text(ring: RingSpec, mono: Monomial) -> list[str]:
    parts = []
    for name, e in zip(ring.names, mono):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return parts


def to_text(p: Polynomial) -> str:
    """Canonical text: ``c * v1^e1 * v2^e2`` terms in descending order; unit coefficients dropped."""
    if not p:
        return "0"
    pieces = []
    for k, (mono, c) in enumerate(p.terms()):
        factors = _monomial_text(p.ring, mono)
        mag = abs(c)
        body = " * ".join(([str(mag)] if mag != 1 or not factors else []) + factors)
        if k == 0:
            pieces.append(body if c > 0 else "-" + body)
        else:
            pieces.append(("+ " if c > 0 else "- ") + body)
    return " ".join(pieces)


_TERM_RE = re.compile(r"\s*([+-])?\s*([^+-]+)")


def parse(ring: RingSpec, text: str) -> Polynomial:
    """Inverse of :func:`to_text` (also accepts ``*`` without spaces)."""
    text = text.strip()
    if text == "0":
        return ring.zero()
    out: dict[Monomial, int] = {}
    pos = 0
    while pos < len(text):
        m = _TERM_RE.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse {text!r} at {pos}")
        sign = -1 if m.group(1) == "-" else 1
        coeff = 1
        mono = [0] * ring.nvars
        for factor in m.group(2).split("*"):
            factor = factor.strip()
            if not factor:
                raise ValueError(f"empty factor in {text!r}")
            if factor.isdigit():
                coeff *= int(factor)
                continue
            name, _, exp = factor.partition("^")
            mono[ring.index(name.strip())] += int(exp) if exp else 1
        key = tuple(mono)
        out[key] = out.get(key, 0) + sign * coeff
        pos = m.end()
    return Polynomial(ring, out)


def product(factors: Iterable[Polynomial], ring: RingSpec) -> Polynomial:
    out = ring.const(1)
    for f in factors:
        out = out * f
    return out
