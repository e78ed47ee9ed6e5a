"""Betti numbers of monomial ideals in three variables.

Two independent algorithms.  The primary one walks the lcm lattice of
the generators and takes reduced homology of the divisor complex on
the three variable vertices at each multidegree.  The reference one
builds the full subset (Taylor) complex, tensors it down to vector
spaces per multidegree and reads off the homology; it is capped at 12
generators and exists so the two can be played against each other.

The width bounds and the cyclic-polytope cross-checks consume the
Betti numbers of the initial ideal of a generator set.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import NotGroebner, TooManyGenerators, Unsupported
from .groebner_mini import Polynomial, buchberger
from .semigroup_core import Mono, Semigroup, compute_structure, mdivides, mlcm
from .tangent_cone import GeneratorSet, tangent_cone_generators


@dataclass(frozen=True, slots=True)
class BettiTable:
    """beta_i of an ideal; graded holds (multidegree, i, dimension)."""

    beta0: int
    beta1: int
    beta2: int
    graded: tuple[tuple[Mono, int, int], ...] = ()


def _rank(rows: list[list[int]], prime: int | None = None) -> int:
    """Row rank by Gaussian elimination, exact or modulo a prime."""
    if not rows or not rows[0]:
        return 0
    if prime is None:
        mat = [[Fraction(e) for e in row] for row in rows]
    else:
        mat = [[e % prime for e in row] for row in rows]
    ncols = len(mat[0])
    rank = 0
    col = 0
    while rank < len(mat) and col < ncols:
        pivot = next((r for r in range(rank, len(mat)) if mat[r][col]), None)
        if pivot is None:
            col += 1
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        inv = (
            1 / mat[rank][col] if prime is None else pow(mat[rank][col], -1, prime)
        )
        for r in range(rank + 1, len(mat)):
            if mat[r][col]:
                factor = mat[r][col] * inv
                for c in range(col, ncols):
                    mat[r][c] -= factor * mat[rank][c]
                    if prime is not None:
                        mat[r][c] %= prime
        rank += 1
        col += 1
    return rank


def _check_minimal(gens: list[Mono]) -> None:
    for g in gens:
        for other in gens:
            if other is not g and mdivides(other, g):
                raise ValueError(f"generators not minimal: {other} divides {g}")


def _lcm_lattice(gens: list[Mono]) -> list[Mono]:
    latt = set(gens)
    frontier = set(gens)
    while frontier:
        new = set()
        for u in frontier:
            for g in gens:
                m = mlcm(u, g)
                if m not in latt:
                    latt.add(m)
                    new.add(m)
        frontier = new
    return sorted(latt)


def _divisor_complex_homology(b: Mono, member) -> tuple[int, int, int]:
    """Dims of reduced H_-1, H_0, H_1 of the divisor complex at b.

    Faces are the subsets sigma of the support of b with x^(b - sigma)
    still in the ideal; downward closure is automatic since dividing
    out fewer variables gives a multiple.  On three vertices H_2
    vanishes (the only 2-face has nonzero boundary), so it is not
    computed.
    """
    if not member(b):
        return (0, 0, 0)

    def drop(sigma: tuple[int, ...]) -> Mono:
        m = list(b)
        for i in sigma:
            m[i] -= 1
        return tuple(m)

    support = [i for i in range(3) if b[i] > 0]
    verts = [i for i in support if member(drop((i,)))]
    edges = [e for e in combinations(support, 2) if member(drop(e))]
    has_triangle = len(support) == 3 and member(drop(tuple(support)))

    d0_rank = 1 if verts else 0
    d1 = [
        [1 if v == e[1] else -1 if v == e[0] else 0 for v in verts] for e in edges
    ]
    d1_rank = _rank(d1)
    d2_rank = 0
    if has_triangle:
        # boundary of (a,b,c): +(b,c) -(a,c) +(a,b); the sign pattern
        # matches the index in the sorted pair list
        pairs = list(combinations(support, 2))
        d2_rank = _rank([[(-1) ** pairs.index(e) for e in edges]])

    h_minus1 = 1 - d0_rank
    h0 = len(verts) - d0_rank - d1_rank
    h1 = len(edges) - d1_rank - d2_rank
    return (h_minus1, h0, h1)


def betti_numbers(gens: list[Mono], cap: int = 64, graded: bool = False) -> BettiTable:
    """Exact beta_0, beta_1, beta_2 of the ideal generated by gens.

    Walks the lcm lattice and sums divisor-complex homology; nonzero
    graded Betti numbers only occur at lattice multidegrees.
    """
    if not gens:
        return BettiTable(0, 0, 0)
    if len(gens) > cap:
        raise TooManyGenerators(f"{len(gens)} generators exceeds cap {cap}")
    _check_minimal(gens)

    def member(m: Mono) -> bool:
        return any(mdivides(g, m) for g in gens)

    beta = [0, 0, 0]
    entries: list[tuple[Mono, int, int]] = []
    for b in _lcm_lattice(gens):
        dims = _divisor_complex_homology(b, member)
        for i, dim in enumerate(dims):
            if dim:
                beta[i] += dim
                if graded:
                    entries.append((b, i, dim))
    if beta[0] != len(gens):
        raise ValueError(f"beta0 = {beta[0]} but {len(gens)} minimal generators")
    if not beta[2] <= beta[1] <= beta[0] * (beta[0] - 1) // 2:
        raise ValueError(f"implausible Betti numbers {beta}")
    return BettiTable(beta[0], beta[1], beta[2], tuple(entries))


def betti_numbers_taylor(
    gens: list[Mono], cap: int = 12, prime: int | None = None
) -> BettiTable:
    """Reference computation through the full subset complex.

    For each multidegree b the subsets with lcm exactly b form a
    complex of vector spaces whose homology at position i+1 is
    beta_i,b of the ideal.  Exponential in the generator count, hence
    the low cap.
    """
    r = len(gens)
    if r == 0:
        return BettiTable(0, 0, 0)
    if r > cap:
        raise TooManyGenerators(f"{r} generators exceeds cap {cap}")
    _check_minimal(gens)

    def sub_lcm(subset: tuple[int, ...]) -> Mono:
        m = (0, 0, 0)
        for i in subset:
            m = mlcm(m, gens[i])
        return m

    by_degree: dict[Mono, dict[int, list[tuple[int, ...]]]] = {}
    for size in range(1, r + 1):
        for subset in combinations(range(r), size):
            b = sub_lcm(subset)
            by_degree.setdefault(b, {}).setdefault(size, []).append(subset)

    beta = [0, 0, 0]
    entries: list[tuple[Mono, int, int]] = []
    for b in sorted(by_degree):
        strata = by_degree[b]
        ranks: dict[int, int] = {}
        for size, basis in strata.items():
            below = {s: k for k, s in enumerate(strata.get(size - 1, []))}
            rows = []
            for subset in basis:
                row = [0] * len(below)
                for pos, j in enumerate(subset):
                    rest = subset[:pos] + subset[pos + 1 :]
                    k = below.get(rest)
                    if k is not None:
                        row[k] = (-1) ** pos
                rows.append(row)
            ranks[size] = _rank(rows, prime) if below else 0
        for size, basis in strata.items():
            dim = len(basis) - ranks.get(size, 0) - ranks.get(size + 1, 0)
            i = size - 1  # homological index for the ideal
            if dim and i <= 2:
                beta[i] += dim
                entries.append((b, i, dim))
            elif dim:
                raise ValueError(f"nonzero beta_{i} at {b} in three variables")
    return BettiTable(beta[0], beta[1], beta[2], tuple(entries))


def euler_check(gens: list[Mono], cap: int = 16) -> dict:
    """Alternating-sum identity per multidegree.

    The alternating sum of graded Betti numbers at b must equal the
    signed subset count sum((-1)^(|S|+1) over subsets S with lcm S = b).
    Subset enumeration is exponential, hence the cap.
    """
    if len(gens) > cap:
        raise TooManyGenerators(f"{len(gens)} generators exceeds cap {cap}")
    table = betti_numbers(gens, graded=True)
    alternating: dict[Mono, int] = {}
    for b, i, dim in table.graded:
        alternating[b] = alternating.get(b, 0) + (-1) ** i * dim
    signed: dict[Mono, int] = {}
    for size in range(1, len(gens) + 1):
        for subset in combinations(gens, size):
            b = (0, 0, 0)
            for g in subset:
                b = mlcm(b, g)
            signed[b] = signed.get(b, 0) + (-1) ** (size + 1)
    signed = {b: v for b, v in signed.items() if v}
    mismatches = [
        {"multidegree": list(b), "alternating": alternating.get(b, 0), "signed": signed.get(b, 0)}
        for b in sorted(set(alternating) | set(signed))
        if alternating.get(b, 0) != signed.get(b, 0)
    ]
    return {"ok": not mismatches, "mismatches": mismatches}


def initial_ideal(gs: GeneratorSet) -> list[Mono]:
    """Lead monomials of the generators, certified to generate in(I).

    The generator set must be its own Groebner basis; completion with
    a doubled degree cap must add nothing.
    """
    polys = [Polynomial.from_form(f) for f in gs.forms()]
    cap = 2 * max(p.degree() for p in polys)
    gb = buchberger(polys, degree_cap=cap)
    if len(gb.generators) != len(polys):
        raise NotGroebner(
            f"completion added {len(gb.generators) - len(polys)} elements below degree {cap}"
        )
    return [p.lead_monomial() for p in polys]


def cyclic_polytope_face_count(i: int, n: int, r: int) -> int:
    """Number of i-faces of the cyclic n-polytope with r vertices."""
    if n != 3:
        raise Unsupported(f"only the space-curve case n = 3 is implemented, got {n}")
    if i == 0:
        return r
    if i == 1:
        return 3 * r - 6
    if i == 2:
        return 2 * r - 4
    raise Unsupported(f"face dimension {i} out of range for n = 3")


def check_theorem_bounds(S: Semigroup, gs: GeneratorSet) -> dict:
    """Width bounds on the Betti numbers of the initial ideal.

    beta_i(I) is bounded by beta_i(in(I)) for homogeneous I, so the
    checks on the initial ideal are upper-bound checks for the tangent
    cone ideal itself.  Failures are report entries, not exceptions.
    """
    monos = initial_ideal(gs)
    table = betti_numbers(monos)
    s = S.s
    checks = [
        {
            "name": "beta0_le_width_plus_1",
            "value": table.beta0,
            "limit": s + 1,
            "ok": table.beta0 <= s + 1,
        },
        {
            "name": "beta1_le_3_width_minus_3",
            "value": table.beta1,
            "limit": 3 * s - 3,
            "ok": table.beta1 <= 3 * s - 3,
        },
        {
            "name": "beta2_le_2_width_minus_3",
            "value": table.beta2,
            "limit": 2 * s - 3,
            "ok": table.beta2 <= 2 * s - 3,
        },
    ]
    r = table.beta0
    if r >= 3:
        edge_limit = cyclic_polytope_face_count(1, 3, r)
        facet_limit = cyclic_polytope_face_count(2, 3, r) - 1
        checks.append(
            {
                "name": "beta1_le_cyclic_edges",
                "value": table.beta1,
                "limit": edge_limit,
                "ok": table.beta1 <= edge_limit,
            }
        )
        checks.append(
            {
                "name": "beta2_le_cyclic_facets_minus_1",
                "value": table.beta2,
                "limit": facet_limit,
                "ok": table.beta2 <= facet_limit,
            }
        )
    else:
        checks.append(
            {
                "name": "beta1_trivial_small_mu",
                "value": table.beta1,
                "limit": max(0, r - 1),
                "ok": table.beta1 <= max(0, r - 1),
            }
        )
        checks.append(
            {
                "name": "beta2_zero_small_mu",
                "value": table.beta2,
                "limit": 0,
                "ok": table.beta2 == 0,
            }
        )
    return {
        "triple": list(S.triple),
        "case": gs.case_tag,
        "s": s,
        "beta0": table.beta0,
        "beta1": table.beta1,
        "beta2": table.beta2,
        "checks": checks,
        "ok": all(c["ok"] for c in checks),
    }


def k_ab_threshold(S: Semigroup, gs: GeneratorSet | None = None) -> dict:
    """Threshold k = b*max(a/d, (b-a)/d - 1) for mu stabilization.

    Once n1 reaches the threshold, mu must be exactly 2 in the
    complete-intersection cases and 3 otherwise.  Below the threshold
    no assertion is made.
    """
    k = S.b * max(S.a // S.d, (S.b - S.a) // S.d - 1)
    applies = S.n1 >= k
    if gs is None:
        gs = tangent_cone_generators(S, compute_structure(S))
    expected = None
    ok = True
    if applies:
        expected = 2 if gs.case_tag.startswith("CI") else 3
        ok = gs.mu == expected
    return {
        "triple": list(S.triple),
        "k": k,
        "applies": applies,
        "expected_mu": expected,
        "mu": gs.mu,
        "ok": ok,
    }
