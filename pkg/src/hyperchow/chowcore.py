"""Torus-equivariant Chow presentations of spaces of binary forms with distinct roots.

A rank-2 torus acts on binary forms of degree N by

    (t0, t1) . f = t0^a t1^b f(t0^-alpha0 t1^-alpha1 x0, t0^-beta0 t1^-beta1 x1)

and the equivariant Chow ring of the distinct-roots locus is Z[l1, l2] modulo
three relations obtained by substituting xi = a*l1 + b*l2 into

    alpha10 = 2(N-1) xi - N(N-1)(T1 + T2)
    alpha11 = xi^2 - (T1 + T2) xi - N(N-2) T1 T2
    p       = prod_{i=0..N} (xi - (N-i) T1 - i T2)

with T1 = alpha0 l1 + alpha1 l2 and T2 = beta0 l1 + beta1 l2. Removing the
coordinate hyperplanes that encode the marked Weierstrass points adds their
equivariant classes as further relations. Rank-1 actions reuse the same
formulas in a single variable ``l`` with every second component zero.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum

from .exactpoly import Polynomial, RingSpec, parse, product
from .zideal import IdealZ

RING_L = RingSpec.of(("l1", 1), ("l2", 1))
RING_RANK1 = RingSpec.of(("l", 1))
RING_EVEN_HG = RingSpec.of(("c1", 1), ("c2", 2))
RING_TAU = RingSpec.of(("tau", 1), ("c2", 2), ("c3", 3))


class Family(str, Enum):
    H = "H"
    M0 = "M0"

    def __str__(self) -> str:
        return self.value


def _family(family) -> Family:
    try:
        return Family(str(family))
    except ValueError:
        raise ValueError(f"unknown family {family!r}; expected H or M0") from None


def _check_genus(g: int) -> None:
    if not isinstance(g, int) or g < 2:
        raise ValueError(f"genus must be an integer >= 2, got {g!r}")


def _check_torus_n(n: int) -> None:
    if n not in (1, 2, 3):
        raise ValueError(f"torus models exist only for n in 1..3, got {n!r}")


@dataclass(frozen=True)
class TorusActionSpec:
    rank: int
    N: int
    twist: tuple[int, int]
    x0_weights: tuple[int, int]
    x1_weights: tuple[int, int]

    def __post_init__(self) -> None:
        if self.rank not in (1, 2):
            raise ValueError("rank must be 1 or 2")
        if self.N < 1:
            raise ValueError("N must be positive")
        if self.rank == 1 and (self.twist[1], self.x0_weights[1], self.x1_weights[1]) != (0, 0, 0):
            raise ValueError("rank-1 actions must have zero second components")

    @property
    def ring(self) -> RingSpec:
        return RING_L if self.rank == 2 else RING_RANK1

    def _linear(self, pair: tuple[int, int]) -> Polynomial:
        return self.ring.linear(list(pair[: self.ring.nvars]))

    def character_classes(self) -> "CharacterClasses":
        return CharacterClasses(self._linear(self.x0_weights), self._linear(self.x1_weights))

    def xi_image(self) -> Polynomial:
        return self._linear(self.twist)


@dataclass(frozen=True)
class CharacterClasses:
    T1: Polynomial
    T2: Polynomial


@dataclass(frozen=True)
class ChowPresentation:
    ring: RingSpec
    relations: tuple[Polynomial, ...]
    relation_names: tuple[str, ...]
    distinguished: dict[str, Polynomial] = field(default_factory=dict)
    family: str | None = None
    g: int | None = None
    n: int | None = None
    rank: int | None = None

    def __post_init__(self) -> None:
        if len(self.relations) != len(self.relation_names):
            raise ValueError("one name per relation required")
        for r in self.relations:
            if r.ring != self.ring or not r.is_homogeneous():
                raise ValueError(f"relation {r} must be homogeneous in {self.ring}")

    def ideal(self) -> IdealZ:
        return IdealZ.of(list(self.relations), self.ring)

    def degree_one(self) -> list[tuple[str, Polynomial]]:
        return [(nm, r) for nm, r in zip(self.relation_names, self.relations) if r and r.weighted_degree() == 1]

    def higher(self) -> list[tuple[str, Polynomial]]:
        return [(nm, r) for nm, r in zip(self.relation_names, self.relations) if r and r.weighted_degree() != 1]

    def degree_one_matrix(self) -> list[list[int]]:
        """Rows of the degree-one relations in the character lattice."""
        return [r.linear_coefficients() for _, r in self.degree_one()]

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "g": self.g,
            "n": self.n,
            "rank": self.rank,
            "variables": self.ring.to_json(),
            "relations": [str(r) for r in self.relations],
            "relation_names": list(self.relation_names),
            "distinguished": {k: str(v) for k, v in self.distinguished.items()},
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    @classmethod
    def from_json(cls, data: dict) -> "ChowPresentation":
        ring = RingSpec.from_json(data["variables"])
        return cls(
            ring,
            tuple(parse(ring, s) for s in data["relations"]),
            tuple(data["relation_names"]),
            {k: parse(ring, v) for k, v in data["distinguished"].items()},
            data.get("family"),
            data.get("g"),
            data.get("n"),
            data.get("rank"),
        )


def _sorted_by_degree(pairs):
    # stable: degree-one relations first, original order otherwise
    return sorted(pairs, key=lambda nr: nr[1].weighted_degree() if nr[1] else 0)


def action_catalog(family, g: int, n: int) -> TorusActionSpec:
    """Torus action whose equivariant Chow ring of U_{w,n} computes the stack."""
    family = _family(family)
    _check_genus(g)
    _check_torus_n(n)
    even = g % 2 == 0
    N = {1: 2 * g + 1, 2: 2 * g, 3: 2 * g - 1}[n]
    if n == 3:
        a = -2 if family is Family.H else -1
        return TorusActionSpec(1, N, (a, 0), (0, 0), (0, 0))
    if family is Family.M0:
        return TorusActionSpec(2, N, (-1, g), (0, 1), (0, 0))
    if not even:
        return TorusActionSpec(2, N, (-2, g), (0, 1), (0, 0))
    if n == 1:
        return TorusActionSpec(2, N, (g - 1, g), (1, 0), (0, 1))
    return TorusActionSpec(2, N, (g - 1, g - 1), (1, 0), (0, 1))


def discriminant_presentation(action: TorusActionSpec) -> ChowPresentation:
    """Presentation of A_T(A(N) minus the discriminant) with xi already eliminated."""
    N = action.N
    if N < 2:
        raise ValueError("need N >= 2")
    base = action.ring
    ring_xi = RingSpec(base.names + ("xi",), base.weights + (1,))
    lift = {name: ring_xi.gen(name) for name in base.names}
    cc = action.character_classes()
    T1 = cc.T1.compose(ring_xi, lift)
    T2 = cc.T2.compose(ring_xi, lift)
    xi = ring_xi.gen("xi")
    alpha10 = 2 * (N - 1) * xi - N * (N - 1) * (T1 + T2)
    alpha11 = xi * xi - (T1 + T2) * xi - N * (N - 2) * T1 * T2
    p = product((xi - (N - i) * T1 - i * T2 for i in range(N + 1)), ring_xi)
    image = action.xi_image()
    rels = [r.substitute("xi", image) for r in (alpha10, alpha11, p)]
    return ChowPresentation(
        base,
        tuple(rels),
        ("alpha10", "alpha11", "p"),
        {"xi": image, "T1": cc.T1, "T2": cc.T2},
        rank=action.rank,
    )


def hyperplane_class(action: TorusActionSpec, i: int) -> Polynomial:
    """Equivariant class of the hyperplane where the coefficient of x0^(N-i) x1^i vanishes."""
    if not 0 <= i <= action.N:
        raise IndexError(f"coefficient index {i} outside 0..{action.N}")
    N = action.N
    a, b = action.twist
    (al0, al1), (be0, be1) = action.x0_weights, action.x1_weights
    vec = (a - (N - i) * al0 - i * be0, b - (N - i) * al1 - i * be1)
    return action.ring.linear(list(vec[: action.ring.nvars]))


def marked_hyperplanes(action: TorusActionSpec, n: int) -> dict[str, Polynomial]:
    """Hyperplanes removed for n marked points: h(0,1)=0, h(1,0)=0 and (n=3) h(1,1)=0."""
    _check_torus_n(n)
    N = action.N
    if n == 1:
        return {"L": hyperplane_class(action, N)}
    if n == 2:
        return {"L0": hyperplane_class(action, N), "Linf": hyperplane_class(action, 0)}
    # h(1,1)=0 is not a coordinate hyperplane; with zero variable weights every
    # coefficient carries the same character, so it shares the class.
    if action.rank != 1 or any(action.x0_weights) or any(action.x1_weights):
        raise ValueError("three marked points require the rank-1 scalar action")
    return {
        "L0": hyperplane_class(action, N),
        "L1": hyperplane_class(action, 0),
        "Linf": hyperplane_class(action, 0),
    }


def localize(pres: ChowPresentation, hyperplanes, names=None) -> ChowPresentation:
    """Quotient by the classes of removed hyperplanes (appended as degree-one relations)."""
    if isinstance(hyperplanes, dict):
        names = list(hyperplanes)
        hyperplanes = list(hyperplanes.values())
    hyperplanes = list(hyperplanes)
    if names is None:
        names = [f"H{k}" for k in range(len(hyperplanes))]
    for h in hyperplanes:
        if h.ring != pres.ring:
            raise ValueError(f"hyperplane {h} is not in {pres.ring}")
        if h and h.weighted_degree() != 1:
            raise ValueError(f"hyperplane class {h} must have degree one")
    pairs = _sorted_by_degree(list(zip(pres.relation_names, pres.relations)) + list(zip(names, hyperplanes)))
    distinguished = dict(pres.distinguished)
    distinguished.update(zip(names, hyperplanes))
    return ChowPresentation(
        pres.ring,
        tuple(r for _, r in pairs),
        tuple(nm for nm, _ in pairs),
        distinguished,
        pres.family,
        pres.g,
        pres.n,
        pres.rank,
    )


# -- psi classes ---------------------------------------------------------------

SECTIONS = {1: ("w",), 2: ("0", "inf"), 3: ("0", "1", "inf")}


def equation_weight(g: int, n: int, section: str) -> Polynomial:
    """T-weight class of the equation s = 0 cutting out the Weierstrass section."""
    _check_genus(g)
    _check_torus_n(n)
    if section not in SECTIONS[n]:
        raise ValueError(f"section must be one of {SECTIONS[n]} for n={n}")
    if n == 3:
        return RING_RANK1.linear([-1])
    if g % 2 == 0:
        h = g // 2
        lo, hi = h, -(h + 1)  # t0^(g/2) t1^(-(g+2)/2)
        vec = (hi, lo) if section == "inf" else (lo, hi)
    else:
        h = (g + 1) // 2
        vec = (-1, -h) if section == "inf" else (-1, h)
    return RING_L.linear(list(vec))


@dataclass(frozen=True)
class PsiClassSpec:
    family: str
    g: int
    n: int
    section: str
    cls: Polynomial

    @property
    def vector(self) -> list[int]:
        return self.cls.linear_coefficients()


def psi_class(family, g: int, n: int, section: str | None = None) -> PsiClassSpec:
    family = _family(family)
    if family is not Family.H:
        raise ValueError("psi classes are only modelled on the Weierstrass stacks (family H)")
    _check_genus(g)
    _check_torus_n(n)
    if section is None:
        section = SECTIONS[n][-1]
    if n == 3:
        # every psi restricts to -l; equal to the negated equation weight modulo 2l
        if section not in SECTIONS[3]:
            raise ValueError(f"section must be one of {SECTIONS[3]}")
        return PsiClassSpec("H", g, n, section, RING_RANK1.linear([-1]))
    return PsiClassSpec("H", g, n, section, -equation_weight(g, n, section))


def m0_generators(g: int, n: int) -> list[Polynomial]:
    """Explicit generators of the M0 Picard group (empty when it is trivial)."""
    _check_genus(g)
    _check_torus_n(n)
    if n == 1:
        return [RING_L.linear([-1, g + 1])]
    if n == 2:
        return [RING_L.linear([-1, g + 1]), RING_L.linear([-1, -(g + 1)])]
    return []


def weierstrass_presentation(family, g: int, n: int) -> ChowPresentation:
    """Full torus presentation for the n-marked stack (n = 1, 2, 3)."""
    family = _family(family)
    action = action_catalog(family, g, n)
    base = discriminant_presentation(action)
    pres = localize(base, marked_hyperplanes(action, n))
    return ChowPresentation(
        pres.ring, pres.relations, pres.relation_names, pres.distinguished,
        family.value, g, n, action.rank,
    )


# -- source rings ----------------------------------------------------------------

def hg_source_ring(g: int) -> tuple[RingSpec, IdealZ, dict[str, Polynomial]]:
    """Chow ring of the unmarked stack and the map into the one-pointed torus ring."""
    _check_genus(g)
    l1, l2 = RING_L.gens()
    if g % 2 == 0:
        c1, c2 = RING_EVEN_HG.gens()
        ideal = IdealZ(RING_EVEN_HG, (2 * (2 * g + 1) * c1, g * (g - 1) * c1**2 - 4 * g * (g + 1) * c2))
        return RING_EVEN_HG, ideal, {"c1": l1 + l2, "c2": l1 * l2}
    tau, c2, c3 = RING_TAU.gens()
    ideal = IdealZ(RING_TAU, (4 * (2 * g + 1) * tau, 8 * tau**2 - 2 * g * (g + 1) * c2, 2 * c3))
    return RING_TAU, ideal, {"tau": l1, "c2": -(l2**2), "c3": RING_L.zero()}


def thm12_polynomial(g: int) -> Polynomial:
    """Degree 2g+3 relation of the unpointed M0 quotient, expanded in Z[tau, c2, c3]."""
    _check_genus(g)
    tau, c2, c3 = RING_TAU.gens()
    q = tau**2 + c2
    cubic = tau**3 + tau * c2 - c3
    if g % 2:
        h = (g + 1) // 2
        return (g + 1) ** 2 * tau**g * q**h * c2 + tau ** ((g + 3) // 2) * cubic**h
    h = g // 2
    return g * (g + 2) * tau ** (g + 1) * q**h * c2 + tau**h * cubic ** (h + 1)


def thm12_ideal(g: int) -> IdealZ:
    _check_genus(g)
    tau, c2, c3 = RING_TAU.gens()
    return IdealZ(RING_TAU, (2 * tau**2 - 2 * g * (g + 1) * c2, 2 * (2 * g + 1) * tau, 2 * c3))
