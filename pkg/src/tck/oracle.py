"""Independent ground truth for the predicted generating sets.

The oracle never looks at the case dispatch.  It enumerates lattice
vectors a*w1 +/- b*w2 up to a coefficient bound, collects the initial
forms of their binomials, and certifies the prediction by degree-capped
ideal equality in both directions.  A failure therefore localizes: an
oracle form outside the predicted ideal means a missing generator, a
predicted generator outside the oracle ideal means a wrong one.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .betti_monomial import check_theorem_bounds, k_ab_threshold
from .errors import CapExceeded, CapTooSmall
from .groebner_mini import Polynomial, buchberger, ideal_member
from .semigroup_core import (
    Binomial,
    Mono,
    Semigroup,
    StructureData,
    Vec,
    binomial_of,
    compute_structure,
    initial_form,
    mdivides,
    vadd,
    vscale,
)
from .tangent_cone import GeneratorSet, mu_bound_check, tangent_cone_generators


@dataclass(frozen=True, slots=True)
class OracleConfig:
    coeff_bound: int = 30
    degree_cap: int | None = None


@dataclass(frozen=True, slots=True)
class VerificationReport:
    triple: tuple[int, int, int]
    case_tag: str
    prediction_matches_oracle: bool
    oracle_in_prediction: bool
    prediction_in_oracle: bool
    gb_certified: bool
    mu: int
    s: int
    beta0: int | None
    beta1_in: int | None
    beta2_in: int | None
    bounds_mu_ok: bool
    bounds_betti_ok: bool
    bounds_kab_ok: bool
    bounds_ok: bool
    coeff_bound: int
    degree_cap: int
    notes: tuple[str, ...] = field(default=())

    def to_dict(self) -> dict:
        return {
            "triple": list(self.triple),
            "case": self.case_tag,
            "prediction_matches_oracle": self.prediction_matches_oracle,
            "oracle_in_prediction": self.oracle_in_prediction,
            "prediction_in_oracle": self.prediction_in_oracle,
            "gb_certified": self.gb_certified,
            "mu": self.mu,
            "s": self.s,
            "beta0": self.beta0,
            "beta1_in": self.beta1_in,
            "beta2_in": self.beta2_in,
            "bounds_mu_ok": self.bounds_mu_ok,
            "bounds_betti_ok": self.bounds_betti_ok,
            "bounds_kab_ok": self.bounds_kab_ok,
            "bounds_ok": self.bounds_ok,
            "coeff_bound": self.coeff_bound,
            "degree_cap": self.degree_cap,
            "notes": list(self.notes),
        }


def _form_degree(form: Mono | Binomial) -> int:
    if isinstance(form, Binomial):
        return min(form.degree_plus, form.degree_minus)
    return form[0] + form[1] + form[2]


def enumerate_initial_forms(w1: Vec, w2: Vec, cfg: OracleConfig) -> list[Polynomial]:
    """Initial forms of f_v for v = a*w1 +/- b*w2 with 0 < a, b <= N.

    The basis vectors themselves are included.  Deduplication happens
    on the raw forms; forms of degree above the configured cap are
    dropped.  v and -v give the same initial form, so one sign of a
    suffices.
    """
    bound = cfg.coeff_bound
    cap = cfg.degree_cap
    vectors: list[Vec] = [w1, w2]
    for a in range(1, bound + 1):
        ax = vscale(a, w1)
        for b in range(1, bound + 1):
            vectors.append(vadd(ax, vscale(b, w2)))
            vectors.append(vadd(ax, vscale(-b, w2)))
    seen: set[Mono | Binomial] = set()
    forms: list[Mono | Binomial] = []
    for v in vectors:
        form = initial_form(binomial_of(v))
        if form in seen:
            continue
        seen.add(form)
        if cap is not None and _form_degree(form) > cap:
            continue
        forms.append(form)
    return [Polynomial.from_form(f) for f in forms]


def _minimalize(polys: list[Polynomial]) -> list[Polynomial]:
    """Drop monomials that another monomial divides; keep binomials."""
    monos = [p for p in polys if len(p.terms) == 1]
    others = [p for p in polys if len(p.terms) != 1]
    lead = [p.lead_monomial() for p in monos]
    kept = [
        p
        for i, p in enumerate(monos)
        if not any(j != i and mdivides(lead[j], lead[i]) for j in range(len(monos)))
    ]
    return kept + others


def _required_bound(gs: GeneratorSet, default: int) -> int:
    needed = max(
        (max(abs(u), abs(v)) for u, v in (g.coeffs for g in gs.generators)), default=1
    )
    return max(default, needed)


def _verify(S: Semigroup, sd: StructureData, gs: GeneratorSet, cfg: OracleConfig) -> VerificationReport:
    notes: list[str] = []
    predicted = [g.polynomial() for g in gs.generators]
    max_degree = max(p.degree() for p in predicted)
    cap = cfg.degree_cap if cfg.degree_cap is not None else 2 * max_degree
    bound = _required_bound(gs, cfg.coeff_bound)
    if bound > cfg.coeff_bound:
        notes.append(f"coefficient bound raised to {bound} to cover witnesses")

    for attempt in range(2):
        try:
            run_cfg = OracleConfig(coeff_bound=bound, degree_cap=cap)
            oracle_forms = _minimalize(
                enumerate_initial_forms(sd.w1, sd.w2, run_cfg)
            )
            gb_pred = buchberger(predicted, degree_cap=cap)
            gb_certified = len(gb_pred.generators) == len(predicted)

            oracle_in_prediction = True
            for p in oracle_forms:
                if not ideal_member(p, gb_pred):
                    oracle_in_prediction = False
                    notes.append(f"oracle form {p} outside predicted ideal")
                    break

            gb_oracle = buchberger(oracle_forms, degree_cap=cap)
            prediction_in_oracle = True
            for p in predicted:
                if not ideal_member(p, gb_oracle):
                    prediction_in_oracle = False
                    notes.append(f"predicted generator {p} outside oracle ideal")
                    break
            break
        except (CapExceeded, CapTooSmall) as exc:
            if attempt == 1:
                notes.append(f"degree cap {cap} insufficient: {exc}")
                oracle_in_prediction = prediction_in_oracle = gb_certified = False
                break
            notes.append(f"degree cap {cap} hit ({exc}); retrying at {2 * cap}")
            cap = 2 * cap

    mu_report = mu_bound_check(S, gs, sd)
    beta0 = beta1 = beta2 = None
    if gb_certified:
        betti_report = check_theorem_bounds(S, gs)
        bounds_betti_ok = betti_report["ok"]
        beta0 = betti_report["beta0"]
        beta1 = betti_report["beta1"]
        beta2 = betti_report["beta2"]
    else:
        bounds_betti_ok = False
        notes.append("initial ideal unavailable without certification")
    kab_report = k_ab_threshold(S, gs)

    return VerificationReport(
        triple=S.triple,
        case_tag=gs.case_tag,
        prediction_matches_oracle=oracle_in_prediction and prediction_in_oracle,
        oracle_in_prediction=oracle_in_prediction,
        prediction_in_oracle=prediction_in_oracle,
        gb_certified=gb_certified,
        mu=gs.mu,
        s=S.s,
        beta0=beta0,
        beta1_in=beta1,
        beta2_in=beta2,
        bounds_mu_ok=mu_report["ok"],
        bounds_betti_ok=bounds_betti_ok,
        bounds_kab_ok=kab_report["ok"],
        bounds_ok=mu_report["ok"] and bounds_betti_ok and kab_report["ok"],
        coeff_bound=bound,
        degree_cap=cap,
        notes=tuple(notes),
    )


def verify_prediction(S: Semigroup, cfg: OracleConfig | None = None) -> VerificationReport:
    """Build the prediction for S and certify it against the oracle."""
    if cfg is None:
        cfg = OracleConfig()
    sd = compute_structure(S)
    gs = tangent_cone_generators(S, sd)
    return _verify(S, sd, gs, cfg)
