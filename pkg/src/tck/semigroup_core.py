"""Validation of 3-generated numerical semigroups and their structural data.

For a valid triple n1 < n2 < n3 this module computes the minimal
multipliers c_i (smallest positive c with c*n_i in the semigroup of the
other two), representation exponents r_ij, a basis of the relation
lattice, the distinguished binomials f_v with their initial forms, and
the unique homogeneous binomial h.  The structural case tag computed here
drives the whole generator construction downstream.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (
    GcdNotOne,
    InternalInconsistency,
    NotMinimal,
    NotSorted,
    Untyped,
    ZeroVector,
)

# exponent vectors and lattice vectors are plain int triples
Mono = tuple[int, int, int]
Vec = tuple[int, int, int]

CASE_TAGS = (
    "CI_R13_ZERO",
    "CI_R21_ZERO",
    "CI_R12_ZERO_LT",
    "CI_R12_ZERO_EQ",
    "CI_R12_ZERO_GT",
    "NCI_LT",
    "NCI_EQ",
    "NCI_GT",
)


# -- small monomial helpers (shared by the polynomial and Betti engines) --

def mdeg(m: Mono) -> int:
    return m[0] + m[1] + m[2]


def mdivides(m: Mono, n: Mono) -> bool:
    """Does x^m divide x^n?"""
    return m[0] <= n[0] and m[1] <= n[1] and m[2] <= n[2]


def mlcm(m: Mono, n: Mono) -> Mono:
    return (max(m[0], n[0]), max(m[1], n[1]), max(m[2], n[2]))


def mmul(m: Mono, n: Mono) -> Mono:
    return (m[0] + n[0], m[1] + n[1], m[2] + n[2])


def mdiv(m: Mono, n: Mono) -> Mono:
    """Exponent of x^m / x^n; caller guarantees divisibility."""
    return (m[0] - n[0], m[1] - n[1], m[2] - n[2])


def vadd(u: Vec, v: Vec) -> Vec:
    return (u[0] + v[0], u[1] + v[1], u[2] + v[2])


def vscale(k: int, v: Vec) -> Vec:
    return (k * v[0], k * v[1], k * v[2])


@dataclass(frozen=True, slots=True)
class Semigroup:
    """Validated triple with the derived quantities a, b, d and width s."""

    n1: int
    n2: int
    n3: int
    a: int
    b: int
    d: int
    s: int

    @property
    def triple(self) -> tuple[int, int, int]:
        return (self.n1, self.n2, self.n3)

    def weight(self, m: Mono) -> int:
        """Weighted degree of x^m under x, y, z -> n1, n2, n3."""
        return m[0] * self.n1 + m[1] * self.n2 + m[2] * self.n3


@dataclass(frozen=True, slots=True)
class Binomial:
    """x^plus - x^minus with disjoint supports."""

    plus: Mono
    minus: Mono

    @property
    def degree_plus(self) -> int:
        return mdeg(self.plus)

    @property
    def degree_minus(self) -> int:
        return mdeg(self.minus)


@dataclass(frozen=True, slots=True)
class StructureData:
    """Minimal multipliers, representation exponents and the lattice basis.

    w1 and w2 always form a basis of the relation lattice.  In case
    CI_R13_ZERO the y-multiplier vector (-r21, c2, -r23) is parallel to
    w1, so the z-multiplier vector (-r31, -r32, c3) takes the w2 slot.
    delta1/delta2 are set only in the three cases that run the index-set
    machinery.
    """

    c1: int
    c2: int
    c3: int
    r12: int
    r13: int
    r21: int
    r23: int
    r31: int
    r32: int
    w1: Vec
    w2: Vec
    delta1: int | None
    delta2: int | None
    case_tag: str


def _member(t: int, g1: int, g2: int) -> bool:
    """Bounded Diophantine search: is t = a*g1 + b*g2 with a, b >= 0?"""
    for a in range(t // g1 + 1):
        if (t - a * g1) % g2 == 0:
            return True
    return False


def _minimal_triple(n1: int, n2: int, n3: int) -> str | None:
    """Name of a redundant generator, or None if generation is minimal."""
    if _member(n1, n2, n3):
        return "n1"
    if _member(n2, n1, n3):
        return "n2"
    if _member(n3, n1, n2):
        return "n3"
    return None


def validate_semigroup(n1: int, n2: int, n3: int) -> Semigroup:
    """Validate a generator triple.

    Raises NotSorted unless n1 < n2 < n3 with all positive, GcdNotOne when
    a common factor cannot be divided out (the reduced triple is not
    minimally 3-generated), and NotMinimal when a generator is redundant.
    Triples that are a common multiple of a valid primitive triple are
    accepted: the defining ideal only depends on the ratios.
    """
    for v in (n1, n2, n3):
        if not isinstance(v, int) or v < 1:
            raise NotSorted(f"generators must be positive integers, got {v!r}")
    if not (n1 < n2 < n3):
        raise NotSorted(f"need n1 < n2 < n3, got {n1}, {n2}, {n3}")
    g0 = math.gcd(n1, n2, n3)
    if g0 > 1 and _minimal_triple(n1 // g0, n2 // g0, n3 // g0) is not None:
        raise GcdNotOne(
            f"gcd({n1},{n2},{n3}) = {g0} and the reduced triple is not "
            "minimally 3-generated"
        )
    culprit = _minimal_triple(n1, n2, n3)
    if culprit is not None:
        value = {"n1": n1, "n2": n2, "n3": n3}[culprit]
        raise NotMinimal(
            f"{culprit} = {value} is not a minimal generator", redundant=culprit
        )
    a = n2 - n1
    b = n3 - n1
    return Semigroup(n1, n2, n3, a, b, math.gcd(a, b), min(n1 - 1, b))


def _apery(mod: int, step: int) -> list[int | None]:
    """Least multiple of step in each residue class mod ``mod``.

    None marks an unreachable class.  Gives an O(1) membership test for
    the semigroup generated by mod and step.
    """
    table: list[int | None] = [None] * mod
    table[0] = 0
    val = 0
    for _ in range(1, mod):
        val += step
        r = val % mod
        if table[r] is None:
            table[r] = val
    return table


def _min_multiplier(n: int, o1: int, o2: int, bound: int) -> int:
    """Smallest c >= 1 with c*n in <o1, o2>; termination certified by bound."""
    table = _apery(o1, o2)
    for c in range(1, bound + 1):
        t = c * n
        least = table[t % o1]
        if least is not None and t >= least:
            return c
    raise InternalInconsistency(
        f"no multiple of {n} below {bound}*{n} lies in <{o1}, {o2}>"
    )


def _rep_min_high(total: int, mid: int, high: int) -> tuple[int, int]:
    """Write total = r_mid*mid + r_high*high with r_high >= 0 minimal."""
    for rh in range(total // high + 1):
        rest = total - rh * high
        if rest % mid == 0:
            return rest // mid, rh
    raise InternalInconsistency(f"{total} has no representation over ({mid}, {high})")


def _all_reps(total: int, mid: int, high: int) -> list[tuple[int, int]]:
    """All non-negative (r_mid, r_high) with total = r_mid*mid + r_high*high,
    ordered by ascending r_high."""
    out = []
    for rh in range(total // high + 1):
        rest = total - rh * high
        if rest % mid == 0:
            out.append((rest // mid, rh))
    return out


def _cross(u: Vec, v: Vec) -> Vec:
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def _check_basis(S: Semigroup, w1: Vec, w2: Vec) -> None:
    # a pair of lattice vectors is a basis iff its cross product is the
    # primitive normal vector up to sign; any longer multiple flags a
    # proper sublattice
    g0 = math.gcd(S.n1, S.n2, S.n3)
    n = (S.n1 // g0, S.n2 // g0, S.n3 // g0)
    cr = _cross(w1, w2)
    if cr != n and cr != vscale(-1, n):
        raise InternalInconsistency(
            f"({w1}, {w2}) is not a lattice basis for {S.triple}: cross product {cr}"
        )


def compute_structure(S: Semigroup) -> StructureData:
    """Minimal multipliers, representation exponents and the case tag.

    The complete-intersection cases are recognized by the pairings
    r13 = r23 = 0, r21 = r31 = 0, r12 = r32 = 0 (two of the multiplier
    vectors are negatives of each other).  A pairing is detected through
    the existence of the corresponding pure representations, with
    priority to r13 = 0; testing only one side would misfile triples
    whose c2*n2 happens to be a pure n3-multiple without the matching
    z-side degeneracy.  The LT/EQ/GT subcase compares c2 against
    r21 + r23 after normalizing r23 < c3.
    """
    n1, n2, n3 = S.triple
    # c*n1 = n2*n1 etc. give unconditional termination bounds
    c1 = _min_multiplier(n1, n2, n3, n2)
    c2 = _min_multiplier(n2, n1, n3, n1)
    c3 = _min_multiplier(n3, n1, n2, n1)
    delta1: int | None = None
    delta2: int | None = None

    if (c1 * n1) % n2 == 0:
        # c1*n1 = lcm(n1, n2); usually c2*n2 equals it too (then r12 = c2)
        # but c2 may be smaller through an n3-mixed multiple, so the r2j
        # come from their own scan rather than from the pairing
        case = "CI_R13_ZERO"
        r12, r13 = (c1 * n1) // n2, 0
        r21, r23 = _rep_min_high(c2 * n2, n1, n3)
        # (c1, -r12, 0) and the y-multiplier vector are parallel here, so
        # the z-multiplier vector completes the basis; minimize r31
        r32, r31 = _rep_min_high(c3 * n3, n2, n1)
        w1: Vec = (c1, -r12, 0)
        w2: Vec = (-r31, -r32, c3)
    elif (c2 * n2) % n3 == 0 and (c3 * n3) % n2 == 0:
        case = "CI_R21_ZERO"
        r21, r23 = 0, (c2 * n2) // n3
        if c2 * n2 != c3 * n3:
            raise InternalInconsistency(f"{S.triple}: expected c2*n2 = c3*n3")
        # reps of c1*n1 differ by (r12, r13) -> (r12 + c2, r13 - c3), so the
        # minimal-r13 scan lands in (0, c3)
        r12, r13 = _rep_min_high(c1 * n1, n2, n3)
        if not 0 < r13 < c3:
            raise InternalInconsistency(f"{S.triple}: normalization 0 < r13 < c3 failed")
        r31, r32 = 0, c2
        delta1 = c1 - (r12 + r13)
        delta2 = c2 - c3
        if delta1 <= 0 or delta2 <= 0:
            raise InternalInconsistency(f"{S.triple}: delta1, delta2 must be positive")
        w1 = (c1, -r12, -r13)
        w2 = (0, c2, -c3)
    elif (c1 * n1) % n3 == 0 and (c3 * n3) % n1 == 0:
        r12, r13 = 0, (c1 * n1) // n3
        if c1 * n1 != c3 * n3:
            raise InternalInconsistency(f"{S.triple}: expected c1*n1 = c3*n3")
        # the minimal-r23 representation lands in [0, c3); r23 = 0 means
        # c2*n2 is a pure multiple of n1, which forces c2 < r21
        r21, r23 = _rep_min_high(c2 * n2, n1, n3)
        if not 0 <= r23 < c3:
            raise InternalInconsistency(f"{S.triple}: normalization r23 < c3 failed")
        r31, r32 = c1, 0
        if c2 < r21 + r23:
            case = "CI_R12_ZERO_LT"
        elif c2 == r21 + r23:
            case = "CI_R12_ZERO_EQ"
        else:
            case = "CI_R12_ZERO_GT"
            delta1 = c1 - c3
            delta2 = c2 - (r21 + r23)
            if delta1 <= 0:
                raise InternalInconsistency(f"{S.triple}: delta1 must be positive")
        w1 = (c1, 0, -c3)
        w2 = (-r21, c2, -r23)
    else:
        # joint selection: the quadruple must be all-positive and close up
        # to a zero-sum vector triple; usually the first pair of scans wins
        found = None
        for r12, r13 in _all_reps(c1 * n1, n2, n3):
            for r21, r23 in _all_reps(c2 * n2, n1, n3):
                if min(r12, r13, r21, r23) <= 0:
                    continue
                r31 = c1 - r21
                r32 = c2 - r12
                if r31 <= 0 or r32 <= 0:
                    continue
                if r31 * n1 + r32 * n2 == c3 * n3 and r13 + r23 == c3:
                    found = (r12, r13, r21, r23, r31, r32)
                    break
            if found:
                break
        if found is None:
            raise InternalInconsistency(
                f"{S.triple}: no zero-sum all-positive representation triple"
            )
        r12, r13, r21, r23, r31, r32 = found
        if c2 < r21 + r23:
            case = "NCI_LT"
        elif c2 == r21 + r23:
            case = "NCI_EQ"
        else:
            case = "NCI_GT"
            delta1 = c1 - (r12 + r13)
            delta2 = c2 - (r21 + r23)
            if delta1 <= 0:
                raise InternalInconsistency(f"{S.triple}: delta1 must be positive")
        w1 = (c1, -r12, -r13)
        w2 = (-r21, c2, -r23)

    if c1 * n1 != r12 * n2 + r13 * n3:
        raise InternalInconsistency(f"{S.triple}: c1 identity failed")
    if c2 * n2 != r21 * n1 + r23 * n3:
        raise InternalInconsistency(f"{S.triple}: c2 identity failed")
    if c3 * n3 != r31 * n1 + r32 * n2:
        raise InternalInconsistency(f"{S.triple}: c3 identity failed")
    _check_basis(S, w1, w2)
    return StructureData(
        c1, c2, c3, r12, r13, r21, r23, r31, r32, w1, w2, delta1, delta2, case
    )


def lattice_basis(sd: StructureData) -> tuple[Vec, Vec]:
    return sd.w1, sd.w2


def binomial_of(v: Vec) -> Binomial:
    """f_v = x^{v+} - x^{v-}."""
    if v == (0, 0, 0):
        raise ZeroVector("the zero vector has no binomial")
    plus = tuple(max(c, 0) for c in v)
    minus = tuple(max(-c, 0) for c in v)
    return Binomial(plus, minus)  # type: ignore[arg-type]


def initial_form(f: Binomial) -> Mono | Binomial:
    """Homogeneous component of least degree.

    A monomial (the lower-degree side) unless both sides have equal
    degree, in which case the binomial itself is returned.
    """
    dp, dm = f.degree_plus, f.degree_minus
    if dp < dm:
        return f.plus
    if dm < dp:
        return f.minus
    return f


def vector_type(v: Vec) -> int:
    """1-based index of the variable isolated on one side of f_v.

    When both sides are pure powers (one component is zero) the positive
    side is reported.
    """
    pos = [i for i, c in enumerate(v) if c > 0]
    neg = [i for i, c in enumerate(v) if c < 0]
    if not pos or not neg:
        raise Untyped(f"{v} does not split into two sides")
    if len(pos) == 1:
        return pos[0] + 1
    if len(neg) == 1:
        return neg[0] + 1
    raise Untyped(f"{v} has no isolated variable")


def homogeneous_part(S: Semigroup) -> Binomial:
    """The homogeneous binomial h = y^{b/d} - x^{(b-a)/d} z^{a/d}."""
    a, b, d = S.a, S.b, S.d
    h = Binomial((0, b // d, 0), ((b - a) // d, 0, a // d))
    if S.weight(h.plus) != S.weight(h.minus):
        raise InternalInconsistency(f"{S.triple}: h is not weight-homogeneous")
    return h
