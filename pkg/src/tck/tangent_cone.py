"""Minimal generators of the tangent cone ideal, case by case.

Five of the eight cases have short explicit generating sets.  The other
three (CI_R21_ZERO, CI_R12_ZERO_GT, NCI_GT) run the index-set
machinery: two chains A and B of exponent pairs with strictly
decreasing positive values, plus either a pure y-power g or the
homogeneous binomial h, decided by comparing beta_h with epsilon.  In
NCI_GT the pure power z^c3 is always added as well.

Every generator carries a lattice witness v, expressed in the basis
(w1, w2), such that the initial form of the witness binomial equals the
generator; the constructor verifies this identity.  The assembled set
is pruned to an inclusion-minimal one before it is returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import DegenerateDelta, InternalInconsistency, NoSolution
from .fraction_tools import min_fraction_in_interval, phi
from .groebner_mini import Polynomial, buchberger, ideal_member, revlex_key
from .semigroup_core import (
    Binomial,
    Mono,
    Semigroup,
    StructureData,
    Vec,
    binomial_of,
    compute_structure,
    homogeneous_part,
    initial_form,
    mdivides,
    vadd,
    vscale,
)

IndexPair = tuple[int, int]

_AB_CASES = ("CI_R21_ZERO", "CI_R12_ZERO_GT", "NCI_GT")


@dataclass(frozen=True, slots=True)
class HomogeneousCoeffs:
    """Positive coefficients with -alpha_h*w1 + beta_h*w2 homogeneous."""

    alpha_h: int
    beta_h: int


@dataclass(frozen=True, slots=True)
class Generator:
    """One generator with its lattice witness.

    coeffs expresses the witness in the basis (w1, w2); label records
    which construction produced the generator (G, H, P(a,b), Q(g,s),
    ZC3, YC2 or YRZ).
    """

    form: Mono | Binomial
    label: str
    coeffs: tuple[int, int]
    witness: Vec

    def polynomial(self) -> Polynomial:
        return Polynomial.from_form(self.form)


@dataclass(frozen=True, slots=True)
class GeneratorSet:
    """Pruned generating set plus the index data that produced it."""

    case_tag: str
    generators: tuple[Generator, ...]
    eta: int | None = None
    epsilon: int | None = None
    alpha_h: int | None = None
    beta_h: int | None = None
    A: tuple[IndexPair, ...] | None = None
    B: tuple[IndexPair, ...] | None = None

    @property
    def mu(self) -> int:
        return len(self.generators)

    @property
    def monomials(self) -> list[Mono]:
        return [g.form for g in self.generators if isinstance(g.form, tuple)]

    @property
    def binomial(self) -> Binomial | None:
        found = [g.form for g in self.generators if isinstance(g.form, Binomial)]
        if len(found) > 1:
            raise InternalInconsistency("more than one binomial generator")
        return found[0] if found else None

    @property
    def provenance(self) -> list[str]:
        return [g.label for g in self.generators]

    def forms(self) -> list[Mono | Binomial]:
        return [g.form for g in self.generators]

    def to_dict(self) -> dict:
        binom = self.binomial
        return {
            "monomials": [list(m) for m in self.monomials],
            "binomial": None
            if binom is None
            else {"plus": list(binom.plus), "minus": list(binom.minus)},
            "case": self.case_tag,
            "mu": self.mu,
            "witnesses": [
                {"label": g.label, "vector": list(g.witness), "coeffs": list(g.coeffs)}
                for g in self.generators
            ],
        }


def _witnessed(
    sd: StructureData, u: int, v: int, expected: Mono | Binomial, label: str
) -> Generator:
    vec = vadd(vscale(u, sd.w1), vscale(v, sd.w2))
    form = initial_form(binomial_of(vec))
    if form != expected:
        raise InternalInconsistency(
            f"witness {u}*w1 + {v}*w2 = {vec} has initial form {form}, "
            f"expected {expected} [{label}]"
        )
    return Generator(form=form, label=label, coeffs=(u, v), witness=vec)


def _chain_pair(sd: StructureData) -> tuple[int, int]:
    """The pair (X, Y) entering the chain values alpha*X - beta*Y."""
    if sd.case_tag == "CI_R21_ZERO":
        return sd.r13, sd.c3
    if sd.case_tag == "CI_R12_ZERO_GT":
        return sd.c3, sd.r23
    if sd.case_tag == "NCI_GT":
        return sd.r13, sd.r23
    raise ValueError(f"no index-set machinery in case {sd.case_tag}")


def _check_ratio(sd: StructureData) -> None:
    # delta2/delta1 < Y/X is what keeps both chains meaningful
    X, Y = _chain_pair(sd)
    if sd.delta1 is None or sd.delta2 is None:
        raise InternalInconsistency(f"deltas missing in case {sd.case_tag}")
    if sd.delta2 * X >= sd.delta1 * Y:
        raise InternalInconsistency(
            f"ratio bound fails: delta2/delta1 = {sd.delta2}/{sd.delta1} "
            f"not below {Y}/{X}"
        )


def solve_homogeneous_coeffs(sd: StructureData, S: Semigroup) -> HomogeneousCoeffs:
    """Positive (alpha_h, beta_h) expressing the homogeneous binomial.

    -alpha_h*w1 + beta_h*w2 must equal (-(b-a)/d, b/d, -a/d).  The
    first two coordinates give a 2x2 system whose determinant
    c1*c2 - r12*r21 equals n3 divided by the gcd of the triple, hence
    is positive; the full vector is re-checked afterwards.
    """
    if sd.case_tag not in _AB_CASES:
        raise ValueError(f"no homogeneous system in case {sd.case_tag}")
    t1 = (S.b - S.a) // S.d
    t2 = S.b // S.d
    t3 = S.a // S.d
    det = sd.c1 * sd.c2 - sd.r12 * sd.r21
    if det <= 0:
        raise NoSolution(f"degenerate coefficient system, det = {det}")
    num_a = t1 * sd.c2 - t2 * sd.r21
    num_b = sd.c1 * t2 - sd.r12 * t1
    if num_a % det or num_b % det:
        raise NoSolution(f"non-integral solution for {S.triple}")
    alpha_h, beta_h = num_a // det, num_b // det
    if alpha_h <= 0 or beta_h <= 0:
        raise NoSolution(f"non-positive solution ({alpha_h}, {beta_h}) for {S.triple}")
    vec = vadd(vscale(-alpha_h, sd.w1), vscale(beta_h, sd.w2))
    if vec != (-t1, t2, -t3):
        raise NoSolution(f"third coordinate fails: {vec} != {(-t1, t2, -t3)}")
    return HomogeneousCoeffs(alpha_h, beta_h)


def build_A(sd: StructureData, beta_cap: int) -> list[IndexPair]:
    """Chain of (alpha, beta) pairs with beta < beta_cap, starting (1, 0).

    alpha is the smallest integer with alpha*X > beta*Y, so the value
    alpha*X - beta*Y equals X - (beta*Y mod X); it must strictly
    decrease along the chain while staying positive.  Values repeat in
    beta with period X/gcd(X, Y), so a full period without improvement
    ends the chain.
    """
    X, Y = _chain_pair(sd)
    _check_ratio(sd)
    ratio = Fraction(Y, X)
    period = X // gcd(X, Y)
    pairs: list[IndexPair] = [(1, 0)]
    best = X
    horizon = period
    beta = 1
    while beta < beta_cap and beta <= horizon:
        value = X - (beta * Y) % X
        if value < best:
            alpha = phi(ratio, beta)
            if alpha * X - beta * Y != value:
                raise InternalInconsistency("chain value mismatch in A")
            pairs.append((alpha, beta))
            best = value
            horizon = beta + period
        beta += 1
    return pairs


def build_B(sd: StructureData) -> list[IndexPair]:
    """Chain of (gamma, sigma) pairs starting (0, 1).

    sigma is the smallest integer with sigma*delta2 > gamma*delta1 and
    the value -gamma*X + sigma*Y strictly decreases.  The value is at
    least (gamma*(delta1*Y - delta2*X) + Y)/delta2, which grows with
    gamma, so the scan stops once that floor reaches the current
    minimum.
    """
    X, Y = _chain_pair(sd)
    if sd.delta2 is None or sd.delta2 <= 0:
        raise DegenerateDelta(f"delta2 = {sd.delta2} in case {sd.case_tag}")
    _check_ratio(sd)
    d1, d2 = sd.delta1, sd.delta2
    ratio = Fraction(d1, d2)
    denom = d1 * Y - d2 * X
    pairs: list[IndexPair] = [(0, 1)]
    best = Y
    gamma = 1
    while gamma * denom <= (best - 1) * d2 - Y:
        sigma = phi(ratio, gamma)
        value = -gamma * X + sigma * Y
        if value <= 0:
            raise InternalInconsistency("chain value must stay positive in B")
        if value < best:
            pairs.append((gamma, sigma))
            best = value
        gamma += 1
    return pairs


def _p_generator(sd: StructureData, X: int, Y: int, alpha: int, beta: int) -> Generator:
    expected = (0, alpha * sd.r12 + beta * sd.c2, alpha * X - beta * Y)
    return _witnessed(sd, alpha, -beta, expected, f"P({alpha},{beta})")


def _q_generator(sd: StructureData, X: int, Y: int, gamma: int, sigma: int) -> Generator:
    expected = (gamma * sd.c1 + sigma * sd.r21, 0, -gamma * X + sigma * Y)
    return _witnessed(sd, gamma, -sigma, expected, f"Q({gamma},{sigma})")


def _display_key(g: Generator):
    p = g.polynomial()
    return (p.degree(), revlex_key(p.lead_monomial()), g.label)


def _prune(gens: list[Generator]) -> list[Generator]:
    """Inclusion-minimal subset generating the same ideal.

    For monomial-only sets redundancy is divisibility.  Once the
    binomial is present, redundancy means ideal membership modulo the
    other generators, decided with a degree-capped basis; the input is
    homogeneous, so the capped check is exact at the candidate degree.
    """
    out: list[Generator] = []
    seen: set[Mono | Binomial] = set()
    for g in gens:
        if g.form not in seen:
            seen.add(g.form)
            out.append(g)

    monos = [g for g in out if isinstance(g.form, tuple)]
    drop: set[Mono] = set()
    for g in monos:
        for other in monos:
            if other is not g and mdivides(other.form, g.form):
                drop.add(g.form)
                break
    out = [g for g in out if g.form not in drop]

    if not any(isinstance(g.form, Binomial) for g in out):
        return out

    changed = True
    while changed:
        changed = False
        for g in sorted(out, key=_display_key, reverse=True):
            others = [o for o in out if o is not g]
            if not others:
                continue
            cap = max(o.polynomial().degree() for o in out)
            basis = buchberger([o.polynomial() for o in others], degree_cap=cap)
            if ideal_member(g.polynomial(), basis):
                out.remove(g)
                changed = True
                break
    return out


def _finish(case_tag: str, gens: list[Generator], **extras) -> GeneratorSet:
    kept = _prune(gens)
    kept.sort(key=_display_key)
    return GeneratorSet(case_tag=case_tag, generators=tuple(kept), **extras)


def tangent_cone_generators(
    S: Semigroup, sd: StructureData | None = None
) -> GeneratorSet:
    """Minimal generating set of the tangent cone ideal of S."""
    if sd is None:
        sd = compute_structure(S)
    tag = sd.case_tag

    if tag == "CI_R13_ZERO":
        gens = [
            _witnessed(sd, -1, 0, (0, sd.r12, 0), "YC2"),
            _witnessed(sd, 0, 1, (0, 0, sd.c3), "ZC3"),
        ]
        return _finish(tag, gens)
    if tag == "CI_R12_ZERO_LT":
        gens = [
            _witnessed(sd, 0, 1, (0, sd.c2, 0), "YC2"),
            _witnessed(sd, 1, 0, (0, 0, sd.c3), "ZC3"),
        ]
        return _finish(tag, gens)
    if tag == "CI_R12_ZERO_EQ":
        gens = [
            _witnessed(sd, 0, 1, homogeneous_part(S), "H"),
            _witnessed(sd, 1, 0, (0, 0, sd.c3), "ZC3"),
        ]
        return _finish(tag, gens)
    if tag == "NCI_LT":
        gens = [
            _witnessed(sd, 1, 0, (0, sd.r12, sd.r13), "YRZ"),
            _witnessed(sd, 0, 1, (0, sd.c2, 0), "YC2"),
            _witnessed(sd, -1, -1, (0, 0, sd.c3), "ZC3"),
        ]
        return _finish(tag, gens)
    if tag == "NCI_EQ":
        gens = [
            _witnessed(sd, 1, 0, (0, sd.r12, sd.r13), "YRZ"),
            _witnessed(sd, 0, 1, homogeneous_part(S), "H"),
            _witnessed(sd, -1, -1, (0, 0, sd.c3), "ZC3"),
        ]
        return _finish(tag, gens)

    hc = solve_homogeneous_coeffs(sd, S)
    X, Y = _chain_pair(sd)
    _check_ratio(sd)
    frac = min_fraction_in_interval(Fraction(sd.delta2, sd.delta1), Fraction(Y, X))
    eta, epsilon = frac.numerator, frac.denominator
    use_h = hc.beta_h <= epsilon
    cap = hc.beta_h if use_h else epsilon
    A = build_A(sd, cap)
    B = build_B(sd)
    gens = [_p_generator(sd, X, Y, a, b) for a, b in A]
    gens += [_q_generator(sd, X, Y, g, s) for g, s in B]
    if use_h:
        gens.append(_witnessed(sd, -hc.alpha_h, hc.beta_h, homogeneous_part(S), "H"))
    else:
        gens.append(
            _witnessed(sd, eta, -epsilon, (0, eta * sd.r12 + epsilon * sd.c2, 0), "G")
        )
    if tag == "NCI_GT":
        gens.append(_witnessed(sd, -1, -1, (0, 0, sd.c3), "ZC3"))
    return _finish(
        tag,
        gens,
        eta=eta,
        epsilon=epsilon,
        alpha_h=hc.alpha_h,
        beta_h=hc.beta_h,
        A=tuple(A),
        B=tuple(B),
    )


def mu_bound_check(
    S: Semigroup, gs: GeneratorSet, sd: StructureData | None = None
) -> dict:
    """Check mu against the width bound and the case-specific bound.

    Failures are report entries, never exceptions; each entry carries
    the witnessing numbers.
    """
    if sd is None:
        sd = compute_structure(S)
    mu = gs.mu
    checks = [
        {"name": "mu_le_width_plus_1", "value": mu, "limit": S.s + 1, "ok": mu <= S.s + 1}
    ]
    if gs.case_tag in ("CI_R21_ZERO", "CI_R12_ZERO_GT"):
        checks.append(
            {"name": "mu_le_c3_plus_2", "value": mu, "limit": sd.c3 + 2, "ok": mu <= sd.c3 + 2}
        )
    elif gs.case_tag == "NCI_GT":
        limit = max(sd.r13, sd.r23) + 3
        checks.append(
            {"name": "mu_le_max_r_plus_3", "value": mu, "limit": limit, "ok": mu <= limit}
        )
    return {
        "triple": list(S.triple),
        "case": gs.case_tag,
        "mu": mu,
        "checks": checks,
        "ok": all(c["ok"] for c in checks),
    }
