"""Exact polynomial arithmetic in x, y, z with a capped Buchberger loop.

The order is graded reverse-lexicographic with x > y > z.  Everything the
generator construction feeds through here is a monomial or a binomial
with unit coefficients, so intermediate coefficients must stay in
{-1, 0, 1}; that invariant is asserted and doubles as a correctness
canary.  The degree cap makes completion total: for homogeneous input
the capped basis decides membership exactly up to the cap.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
import heapq

from .errors import CapExceeded, CapTooSmall, InternalInconsistency
from .semigroup_core import Binomial, Mono, mdeg, mdivides, mdiv, mlcm, mmul

Coeff = int | Fraction


def revlex_key(m: Mono):
    """Sort key ascending in the monomial order (largest key = lead)."""
    return (m[0] + m[1] + m[2], -m[2], -m[1])


def revlex_compare(m1: Mono, m2: Mono) -> int:
    """-1, 0 or 1 as m1 <, =, > m2."""
    k1, k2 = revlex_key(m1), revlex_key(m2)
    if k1 < k2:
        return -1
    return 1 if k1 > k2 else 0


class Polynomial:
    """Sparse polynomial: mapping from exponent triple to coefficient."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[Mono, Coeff] | None = None):
        self.terms = {m: c for m, c in (terms or {}).items() if c != 0}

    @classmethod
    def from_monomial(cls, m: Mono, coeff: Coeff = 1) -> Polynomial:
        return cls({m: coeff})

    @classmethod
    def from_binomial(cls, b: Binomial) -> Polynomial:
        if b.plus == b.minus:
            return cls()
        return cls({b.plus: 1, b.minus: -1})

    @classmethod
    def from_form(cls, form: Mono | Binomial) -> Polynomial:
        if isinstance(form, Binomial):
            return cls.from_binomial(form)
        return cls.from_monomial(form)

    def is_zero(self) -> bool:
        return not self.terms

    def lead_monomial(self) -> Mono:
        if not self.terms:
            raise ValueError("zero polynomial has no lead term")
        return max(self.terms, key=revlex_key)

    def lead_coeff(self) -> Coeff:
        return self.terms[self.lead_monomial()]

    def degree(self) -> int:
        # -1 for the zero polynomial
        return max((mdeg(m) for m in self.terms), default=-1)

    def monic(self) -> Polynomial:
        if not self.terms:
            return self
        lc = self.lead_coeff()
        if lc == 1:
            return self
        if lc == -1:
            return Polynomial({m: -c for m, c in self.terms.items()})
        return Polynomial({m: Fraction(c, 1) / lc for m, c in self.terms.items()})

    def sub_scaled(self, coeff: Coeff, shift: Mono, g: Polynomial) -> Polynomial:
        """self - coeff * x^shift * g."""
        terms = dict(self.terms)
        for m, c in g.terms.items():
            key = mmul(m, shift)
            val = terms.get(key, 0) - coeff * c
            if val:
                terms[key] = val
            else:
                terms.pop(key, None)
        return Polynomial(terms)

    def sorted_terms(self) -> list[tuple[Mono, Coeff]]:
        return sorted(self.terms.items(), key=lambda t: revlex_key(t[0]), reverse=True)

    def unit_coeffs(self) -> bool:
        return all(c == 1 or c == -1 for c in self.terms.values())

    def __eq__(self, other) -> bool:
        return isinstance(other, Polynomial) and self.terms == other.terms

    def __repr__(self) -> str:
        if not self.terms:
            return "Polynomial(0)"
        bits = []
        for m, c in self.sorted_terms():
            mono = "".join(f"{v}^{e}" for v, e in zip("xyz", m) if e) or "1"
            bits.append(f"{'+' if c > 0 else '-'}{abs(c) if abs(c) != 1 or mono == '1' else ''}{mono}")
        return "Polynomial(" + "".join(bits).lstrip("+") + ")"


def _assert_units(p: Polynomial, context: str) -> None:
    if not p.unit_coeffs():
        raise InternalInconsistency(
            f"coefficient left {{-1, 0, 1}} during {context}: {p!r}"
        )


def s_pair(f: Polynomial, g: Polynomial) -> Polynomial:
    """S-polynomial with monic lead terms."""
    if f.is_zero() or g.is_zero():
        raise ValueError("s_pair of zero polynomial")
    lf, lg = f.lead_monomial(), g.lead_monomial()
    lcm = mlcm(lf, lg)
    left = Polynomial().sub_scaled(-1, mdiv(lcm, lf), f.monic())
    return left.sub_scaled(1, mdiv(lcm, lg), g.monic())


def normal_form(
    f: Polynomial, G: list[Polynomial], *, check_units: bool = False
) -> Polynomial:
    """Full remainder of f under division by G.

    Reduces the largest reducible term first and uses the first divisor
    in G's stored order, which makes the result deterministic.  The step
    counter is checked against the count of monomials below the start
    degree, a safe overestimate of the longest reduction chain.
    """
    leads = [(g.lead_monomial(), g) for g in G if not g.is_zero()]
    rem = f
    d = f.degree()
    step_bound = (d + 1) * (d + 2) * (d + 3) // 6 + len(f.terms) + 1
    steps = 0
    while True:
        target = None
        for m in sorted(rem.terms, key=revlex_key, reverse=True):
            for lead, g in leads:
                if mdivides(lead, m):
                    target = (m, g, lead)
                    break
            if target:
                break
        if target is None:
            return rem
        m, g, lead = target
        gm = g.monic()
        rem = rem.sub_scaled(rem.terms[m], mdiv(m, lead), gm)
        if check_units:
            _assert_units(rem, "normal_form")
        steps += 1
        if steps > step_bound:
            raise InternalInconsistency("division did not terminate within bound")


@dataclass(frozen=True, slots=True)
class GroebnerBasis:
    generators: list[Polynomial]
    degree_cap: int | None
    skipped_pairs: int = 0
    unit_coefficients: bool = field(default=False)

    def lead_monomials(self) -> list[Mono]:
        return [g.lead_monomial() for g in self.generators]


def buchberger(gens: list[Polynomial], degree_cap: int | None = None) -> GroebnerBasis:
    """Complete gens to a Groebner basis, discarding S-pairs above the cap.

    Raises CapTooSmall when an input generator or a surviving remainder
    does not fit under the cap; for homogeneous input the latter cannot
    happen because remainder degree never exceeds the pair's lcm degree.
    """
    G: list[Polynomial] = []
    for g in gens:
        if g.is_zero():
            continue
        gm = g.monic()
        if gm not in G:
            G.append(gm)
    if not G:
        raise ValueError("no nonzero generators")
    if degree_cap is not None:
        worst = max(g.degree() for g in G)
        if worst > degree_cap:
            raise CapTooSmall(f"generator degree {worst} exceeds cap {degree_cap}")
    check_units = all(g.unit_coeffs() for g in G)

    def push_pairs(heap, upto):
        for i in range(upto):
            gi, gj = G[i], G[upto]
            # monomial-monomial S-pairs cancel exactly
            if len(gi.terms) == 1 and len(gj.terms) == 1:
                continue
            lcm = mlcm(gi.lead_monomial(), gj.lead_monomial())
            heapq.heappush(heap, (mdeg(lcm), revlex_key(lcm), i, upto))

    heap: list = []
    for j in range(len(G)):
        push_pairs(heap, j)
    skipped = 0
    while heap:
        deg, _, i, j = heapq.heappop(heap)
        if degree_cap is not None and deg > degree_cap:
            skipped += 1
            continue
        rem = normal_form(s_pair(G[i], G[j]), G, check_units=check_units)
        if rem.is_zero():
            continue
        if degree_cap is not None and rem.degree() > degree_cap:
            raise CapTooSmall(
                f"remainder of degree {rem.degree()} exceeds cap {degree_cap}"
            )
        G.append(rem.monic())
        push_pairs(heap, len(G) - 1)
    return GroebnerBasis(G, degree_cap, skipped, check_units)


def ideal_member(f: Polynomial, GB: GroebnerBasis) -> bool:
    if GB.degree_cap is not None and f.degree() > GB.degree_cap:
        raise CapExceeded(
            f"degree {f.degree()} above basis cap {GB.degree_cap}"
        )
    return normal_form(f, GB.generators).is_zero()


def ideals_equal_up_to_degree(
    G1: list[Polynomial], G2: list[Polynomial], D: int
) -> bool:
    """Mutual membership of generators under degree-D capped bases.

    Exact ideal equality when both sides are homogeneous and generated
    in degree at most D.
    """
    for g in G1 + G2:
        if g.degree() > D:
            raise CapExceeded(f"generator degree {g.degree()} above cap {D}")
    B1 = buchberger(G1, D)
    B2 = buchberger(G2, D)
    return all(ideal_member(g, B2) for g in G1) and all(
        ideal_member(g, B1) for g in G2
    )
