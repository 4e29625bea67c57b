"""Reference families of polarized rational surfaces, with ampleness checks.

Each family builder returns the surface, the polarization, and a table of
integer claims (intersection numbers, adjoint identities) fixed by closed
formulas in the family parameters.  ``verify_example`` recomputes every claim
from the lattice, runs the ampleness certificate and the brute-force oracle
where the point configuration supports them, classifies the syzygy level, and
compares everything against the frozen fixture table shipped in
``data/examples.json``.

Two independent ampleness routes are provided:

* ``nakai_certificate``: a short list of closed curve-case checks (corner
  and direction margins of linear bounds), sufficient by construction.  It
  refuses to run when the point configuration lacks the assumptions the
  case analysis needs.
* ``brute_force_ample_oracle``: exhaustive minimization of ``A.T`` over the
  admissible irreducible-curve classes inside a search box — exceptional
  classes, strict transforms of irreducible-capable base classes with all
  worst-case multiplicity assignments, and the strict transform of the
  curve carrying the blown-up points.

The certificate is conservative for the oracle's model: whenever the
certificate validates a (possibly perturbed) polarization, the oracle's
minimum is >= 1.
"""

from __future__ import annotations

import dataclasses
import json
import os
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from typing import Callable

from .criteria import NpVerdict, np_classify
from .lattice import (
    KIND_P2,
    DivisorClass,
    PointConfig,
    SurfaceModel,
    blow_up,
    canonical_class,
    k_squared,
)

DEFAULT_BOX = 12
_BOX_ENV = "NP_ORACLE_BOX"


class FamilyError(ValueError):
    """Unknown family id or out-of-range parameters."""


class CertificateRefused(Exception):
    """The certificate's case analysis needs an assumption the config lacks."""

    def __init__(self, family: str, missing: str):
        self.family = family
        self.missing = missing
        super().__init__(
            f"{family}: certificate refused, configuration does not assume "
            f"{missing!r}"
        )


class OracleNotApplicable(Exception):
    """No admissible-curve model exists for this configuration."""


class OracleBoxError(ValueError):
    """The search box cannot contain a required candidate class."""


class VerificationError(AssertionError):
    """A claim, fixture pin, or cross-check failed; names the culprit."""


def default_box() -> int:
    raw = os.environ.get(_BOX_ENV)
    if raw is None:
        return DEFAULT_BOX
    try:
        box = int(raw)
    except ValueError as exc:
        raise OracleBoxError(f"{_BOX_ENV} must be an integer, got {raw!r}") from exc
    if box < 1:
        raise OracleBoxError(f"{_BOX_ENV} must be >= 1, got {box}")
    return box


# --- family data model -----------------------------------------------------


@dataclass(frozen=True)
class Claim:
    """One integer claim: a named quantity with its expected value.

    ``compute`` re-derives the quantity from the lattice data alone.
    """

    quantity: str
    expected: int
    compute: Callable[[SurfaceModel, DivisorClass], int] = field(compare=False)


@dataclass(frozen=True)
class ExampleFamily:
    id: str
    params: tuple[tuple[str, int], ...]
    surface: SurfaceModel
    A: DivisorClass
    claims: tuple[Claim, ...]
    np_flags: tuple[tuple[str, bool], ...]
    np_expected: tuple[str, int | None]
    annotations: tuple[tuple[str, int], ...] = ()

    @property
    def params_dict(self) -> dict[str, int]:
        return dict(self.params)

    @property
    def instance_key(self) -> str:
        if not self.params:
            return "-"
        return ",".join(f"{k}={v}" for k, v in self.params)

    def with_polarization(self, A: DivisorClass) -> "ExampleFamily":
        """The same instance with a perturbed polarization (for robustness
        tests); claims keep their original expected values."""
        return dataclasses.replace(self, A=A)


def _claim_dot(name: str, expected: int, d1, d2) -> Claim:
    """Claim about a pairing of two derived divisors; d1/d2 are callables."""
    return Claim(name, expected, lambda S, A: d1(S, A).dot(d2(S, A)))


def _residual(name: str, lhs, rhs) -> Claim:
    """Claim that two derived divisor classes agree componentwise."""

    def compute(S: SurfaceModel, A: DivisorClass) -> int:
        delta = lhs(S, A) - rhs(S, A)
        return max((abs(c) for c in delta.coeffs), default=0)

    return Claim(name, 0, compute)


def _K(S: SurfaceModel, A: DivisorClass) -> DivisorClass:
    return canonical_class(S)


def _A(S: SurfaceModel, A: DivisorClass) -> DivisorClass:
    return A


def _claims_common(ksq: int, a2: int, deg: int) -> list[Claim]:
    return [
        Claim("K2", ksq, lambda S, A: k_squared(S)),
        Claim("A2", a2, lambda S, A: A.dot(A)),
        Claim("-K.A", deg, lambda S, A: -canonical_class(S).dot(A)),
    ]


# --- builders --------------------------------------------------------------


def _build_1_11(params: dict) -> ExampleFamily:
    _expect_params(params, {})
    S = SurfaceModel.projective_plane()
    A = S.divisor([1])
    claims = _claims_common(9, 1, 3) + [
        _residual("residual(K + 3A)",
                  lambda S, A: canonical_class(S) + 3 * A,
                  lambda S, A: S.zero()),
    ]
    return ExampleFamily(
        "1.11", (), S, A, tuple(claims),
        np_flags=(("ample", True), ("anticanonical", True)),
        np_expected=("ExactMax", 0),
    )


def _build_1_12(params: dict) -> ExampleFamily:
    p = _expect_params(params, {"e": (0, 8)})
    e = p["e"]
    S = SurfaceModel.hirzebruch(e)
    A = S.divisor([1, e + 1])
    claims = _claims_common(8, e + 2, e + 4) + [
        _residual("residual(K + 2A - e*fiber)",
                  lambda S, A: canonical_class(S) + 2 * A,
                  lambda S, A: S.divisor([0, S.e])),
        Claim("oracle_min(K + 2A)", 0,
              lambda S, A: _cone_min(S, canonical_class(S) + 2 * A, 8)[0]),
    ]
    return ExampleFamily(
        "1.12", (("e", e),), S, A, tuple(claims),
        np_flags=(("ample", True), ("anticanonical", True)),
        np_expected=("ExactMax", e + 1),
    )


def _del_pezzo(l: int) -> SurfaceModel:
    cfg = PointConfig(general_position=True, anticanonical_effective=True)
    return blow_up(SurfaceModel.projective_plane(), l, cfg)


def _build_1_13(params: dict) -> ExampleFamily:
    p = _expect_params(params, {"l": (2, 6)})
    l = p["l"]
    S = _del_pezzo(l)
    A = -canonical_class(S)
    claims = _claims_common(9 - l, 9 - l, 9 - l) + [
        _residual("residual(K + A)",
                  lambda S, A: canonical_class(S) + A,
                  lambda S, A: S.zero()),
    ]
    return ExampleFamily(
        "1.13", (("l", l),), S, A, tuple(claims),
        np_flags=(("ample", True), ("anticanonical", True)),
        np_expected=("ExactMax", 6 - l),
    )


def _build_1_14(params: dict) -> ExampleFamily:
    _expect_params(params, {})
    S = _del_pezzo(7)
    A = -canonical_class(S)
    claims = _claims_common(2, 2, 2) + [
        _residual("residual(K + 2A - (-K))",
                  lambda S, A: canonical_class(S) + 2 * A,
                  lambda S, A: -canonical_class(S)),
    ]
    return ExampleFamily(
        "1.14", (), S, A, tuple(claims),
        np_flags=(("ample", True), ("anticanonical", True)),
        np_expected=("NotN0", None),
    )


def _build_1_15(params: dict) -> ExampleFamily:
    _expect_params(params, {})
    S = _del_pezzo(8)
    A = -canonical_class(S)
    claims = _claims_common(1, 1, 1) + [
        _residual("residual(K + 3A - (-2K))",
                  lambda S, A: canonical_class(S) + 3 * A,
                  lambda S, A: -2 * canonical_class(S)),
    ]
    return ExampleFamily(
        "1.15", (), S, A, tuple(claims),
        np_flags=(("ample", True), ("anticanonical", True)),
        np_expected=("NotN0", None),
    )


def _build_1_16(params: dict) -> ExampleFamily:
    p = _expect_params(params, {"e": (0, 2), "n": (-1, 8)})
    e, n = p["e"], p["n"]
    l = 8 - n
    cfg = PointConfig(on_smooth_anticanonical=True, distinct_fibers=True,
                      anticanonical_effective=True)
    S = blow_up(SurfaceModel.hirzebruch(e), l, cfg)
    A = S.pullback([2, e + 3]) - sum(
        (S.exceptional(i) for i in range(l)), start=S.zero())
    claims = _claims_common(n, n + 4, n + 2) + [
        _residual("residual(K + A - pullback(fiber))",
                  lambda S, A: canonical_class(S) + A,
                  lambda S, A: S.pullback([0, 1])),
        _claim_dot("(K+A)^2", 0,
                   lambda S, A: canonical_class(S) + A,
                   lambda S, A: canonical_class(S) + A),
    ]
    status, level = ("ExactMax", n - 1) if n >= 1 else ("NotN0", None)
    return ExampleFamily(
        "1.16", (("e", e), ("n", n)), S, A, tuple(claims),
        np_flags=(("ample", True), ("anticanonical", True)),
        np_expected=(status, level),
    )


def _build_1_17(params: dict) -> ExampleFamily:
    p = _expect_params(params, {"l": (0, 10)})
    l = p["l"]
    cfg = PointConfig(on_smooth_anticanonical=True, away_from_min_section=True,
                      anticanonical_effective=True)
    S = blow_up(SurfaceModel.hirzebruch(1), l, cfg)
    A = S.pullback([3, 4]) - sum(
        (S.exceptional(i) for i in range(l)), start=S.zero())
    claims = _claims_common(8 - l, 15 - l, 11 - l) + [
        _residual("residual(K + A - pullback(C0 + fiber))",
                  lambda S, A: canonical_class(S) + A,
                  lambda S, A: S.pullback([1, 1])),
        _claim_dot("-K.(K+A)", 3,
                   lambda S, A: -canonical_class(S),
                   lambda S, A: canonical_class(S) + A),
    ]
    status, level = ("ExactMax", 8 - l) if l <= 8 else ("NotN0", None)
    return ExampleFamily(
        "1.17", (("l", l),), S, A, tuple(claims),
        np_flags=(("ample", True), ("anticanonical", True)),
        np_expected=(status, level),
    )


def _build_1_18(params: dict) -> ExampleFamily:
    _expect_params(params, {})
    cfg = PointConfig(complete_intersection_of_cubics=True,
                      anticanonical_effective=True)
    S = blow_up(SurfaceModel.projective_plane(), 9, cfg)
    F = -canonical_class(S)          # elliptic fiber class
    E = S.exceptional(8)             # a section of the fibration
    A = E + 2 * F
    claims = _claims_common(0, 3, 1) + [
        _residual("residual(K + 2A - (2*section + 3*fiber))",
                  lambda S, A: canonical_class(S) + 2 * A,
                  lambda S, A: 2 * S.exceptional(8) - 3 * canonical_class(S)),
        _claim_dot("(K+2A).fiber", 2,
                   lambda S, A: canonical_class(S) + 2 * A,
                   lambda S, A: -canonical_class(S)),
    ]
    return ExampleFamily(
        "1.18", (), S, A, tuple(claims),
        np_flags=(("ample", True), ("anticanonical", True)),
        np_expected=("NotN0", None),
    )


def _build_1_19(params: dict) -> ExampleFamily:
    p = _expect_params(params, {"n": (-19, -1)})
    n = p["n"]
    if n % 2 == 0:
        raise FamilyError("1.19 needs odd negative n")
    l = 8 - n
    k = (l - 3) // 2
    cfg = PointConfig(on_smooth_anticanonical=True, distinct_fibers=True,
                      anticanonical_effective=True)
    S = blow_up(SurfaceModel.hirzebruch(0), l, cfg)
    A = S.pullback([2, k]) - sum(
        (S.exceptional(i) for i in range(l)), start=S.zero())
    claims = _claims_common(n, 2 - n, 1) + [
        _residual("residual(K + A - pullback((k-2)*fiber2))",
                  lambda S, A: canonical_class(S) + A,
                  lambda S, A: S.pullback([0, k - 2])),
        _claim_dot("(K+A)^2", 0,
                   lambda S, A: canonical_class(S) + A,
                   lambda S, A: canonical_class(S) + A),
    ]
    return ExampleFamily(
        "1.19", (("n", n),), S, A, tuple(claims),
        np_flags=(("ample", True), ("anticanonical", True)),
        np_expected=("NotN0", None),
    )


def _build_1_20(params: dict) -> ExampleFamily:
    p = _expect_params(params, {"n": (-20, -2)})
    n = p["n"]
    if n % 2 != 0:
        raise FamilyError("1.20 needs even negative n")
    l = 8 - n
    k = (l - 4) // 2
    cfg = PointConfig(on_smooth_anticanonical=True, distinct_fibers=True,
                      anticanonical_effective=True)
    S = blow_up(SurfaceModel.hirzebruch(0), l, cfg)
    A = S.pullback([3, k]) - 2 * S.exceptional(0) - sum(
        (S.exceptional(i) for i in range(1, l)), start=S.zero())
    claims = _claims_common(n, 1 - 2 * n, 1) + [
        _residual("residual(K + A - (pullback(fiber1 + (k-2)*fiber2) - E1))",
                  lambda S, A: canonical_class(S) + A,
                  lambda S, A: S.pullback([1, k - 2]) - S.exceptional(0)),
        _claim_dot("(K+A).(fiber2 through first point)", 0,
                   lambda S, A: canonical_class(S) + A,
                   lambda S, A: S.pullback([0, 1]) - S.exceptional(0)),
    ]
    return ExampleFamily(
        "1.20", (("n", n),), S, A, tuple(claims),
        np_flags=(("ample", True), ("anticanonical", True)),
        np_expected=("NotN0", None),
    )


def _build_obs_1_4(params: dict) -> ExampleFamily:
    p = _expect_params(params, {"n": (4, 12)})
    n = p["n"]
    cfg = PointConfig(general_position=True)
    S = blow_up(SurfaceModel.hirzebruch(0), 9, cfg)
    L = S.pullback([2, n]) - sum(
        (S.exceptional(i) for i in range(9)), start=S.zero())
    claims = [
        Claim("K2", -1, lambda S, A: k_squared(S)),
        Claim("-K.L", 2 * n - 5, lambda S, A: -canonical_class(S).dot(A)),
        Claim("chi(-K - L)", 3 - n,
              lambda S, A: _chi(-canonical_class(S) - A)),
        _residual("residual(-K - L - pullback((2-n)*fiber2))",
                  lambda S, A: -canonical_class(S) - A,
                  lambda S, A: S.pullback([0, 2 - n])),
    ]
    return ExampleFamily(
        "Obs1.4", (("n", n),), S, L, tuple(claims),
        np_flags=(("ample", True), ("bpf", True), ("anticanonical", False)),
        np_expected=("AtLeast", 2 * n - 8),
        annotations=(("h0(-K)", 0), ("h1(-K)", 1), ("h1(-K - L)", n - 3)),
    )


def _chi(d: DivisorClass) -> int:
    from .lattice import euler_characteristic

    return euler_characteristic(d)


_BUILDERS: dict[str, Callable[[dict], ExampleFamily]] = {
    "1.11": _build_1_11,
    "1.12": _build_1_12,
    "1.13": _build_1_13,
    "1.14": _build_1_14,
    "1.15": _build_1_15,
    "1.16": _build_1_16,
    "1.17": _build_1_17,
    "1.18": _build_1_18,
    "1.19": _build_1_19,
    "1.20": _build_1_20,
    "Obs1.4": _build_obs_1_4,
}

# default parameter sweeps covering each family's full stated range
FAMILY_SWEEPS: dict[str, tuple[dict, ...]] = {
    "1.11": ({},),
    "1.12": tuple({"e": e} for e in range(0, 9)),
    "1.13": tuple({"l": l} for l in range(2, 7)),
    "1.14": ({},),
    "1.15": ({},),
    "1.16": tuple({"e": e, "n": n} for e in range(0, 3) for n in range(-1, 9)),
    "1.17": tuple({"l": l} for l in range(0, 11)),
    "1.18": ({},),
    "1.19": tuple({"n": n} for n in range(-1, -20, -2)),
    "1.20": tuple({"n": n} for n in range(-2, -21, -2)),
    "Obs1.4": tuple({"n": n} for n in range(4, 13)),
}

FAMILY_IDS = tuple(_BUILDERS)


def _expect_params(params: dict, spec: dict[str, tuple[int, int]]) -> dict:
    params = dict(params or {})
    unknown = set(params) - set(spec)
    if unknown:
        raise FamilyError(f"unknown parameters: {sorted(unknown)}")
    out = {}
    for name, (lo, hi) in spec.items():
        if name not in params:
            raise FamilyError(f"missing parameter {name!r}")
        value = int(params[name])
        if not lo <= value <= hi:
            raise FamilyError(f"parameter {name}={value} outside [{lo}, {hi}]")
        out[name] = value
    return out


def build_example(family_id: str, params: dict | None = None) -> ExampleFamily:
    """Construct one instance of a reference family."""
    if family_id not in _BUILDERS:
        raise FamilyError(f"unknown family id {family_id!r}")
    return _BUILDERS[family_id](params or {})


# --- ampleness certificate -------------------------------------------------


@dataclass(frozen=True)
class CurveCaseCheck:
    """One curve-case margin: worst admissible point-load vs available degree.

    ``passed`` is the check's own verdict; corner cases require a strictly
    positive margin, direction cases only a nonnegative one.
    """

    case: str
    worst_case_lhs: int
    rhs: int
    passed: bool


@dataclass(frozen=True)
class AmpleCertificate:
    family: str
    self_intersection: int
    exceptional_values: tuple[int, ...]
    curve_case_checks: tuple[CurveCaseCheck, ...]
    assumptions_used: tuple[str, ...]

    @property
    def valid(self) -> bool:
        return (self.self_intersection > 0
                and all(v > 0 for v in self.exceptional_values)
                and all(c.passed for c in self.curve_case_checks))

    def flip_signature(self) -> tuple:
        """Pass/fail pattern of every check, for perturbation comparisons."""
        return (self.self_intersection > 0,
                tuple(v > 0 for v in self.exceptional_values),
                tuple((c.case, c.passed) for c in self.curve_case_checks))

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "self_intersection": self.self_intersection,
            "exceptional_values": list(self.exceptional_values),
            "checks": [
                {"case": c.case, "worst_case_lhs": c.worst_case_lhs,
                 "rhs": c.rhs, "passed": c.passed}
                for c in self.curve_case_checks
            ],
            "assumptions_used": list(self.assumptions_used),
            "valid": self.valid,
        }


def _require(ex: ExampleFamily, flag: str) -> None:
    cfg = ex.surface.config
    if cfg is None or not getattr(cfg, flag):
        raise CertificateRefused(ex.id, flag)


def _weights(ex_surface: SurfaceModel, A: DivisorClass) -> list[int]:
    return [A.dot(ex_surface.exceptional(i)) for i in range(ex_surface.l or 0)]


def _top_sum(weights: list[int], count: int) -> int:
    """Largest possible sum of ``count`` single-point loads (unit caps)."""
    if count <= 0 or not weights:
        return 0
    return sum(sorted(weights, reverse=True)[:count])


def _pair(S: SurfaceModel, A: DivisorClass, a: int, b: int) -> int:
    return A.dot(S.pullback([a, b]))


def _base_anticanonical(e: int) -> tuple[int, int]:
    return (2, e + 2)


def _cone_cases(S: SurfaceModel, A: DivisorClass, wmax: int, corner, dirs,
                extra_load=None) -> list[CurveCaseCheck]:
    """Margin checks for strict transforms over a cone of base classes.

    The admissible point-load of a class (a, b) is bounded by
    ``wmax * (C . (a,b))`` plus an optional extra linear load term; both the
    available degree and the load bound are linear, so positivity on the
    corner plus monotonicity along the generating directions bounds the
    whole cone.
    """
    e = S.e
    cx, cy = _base_anticanonical(e)
    base = SurfaceModel.hirzebruch(e)
    C = base.divisor([cx, cy])

    def load(a: int, b: int) -> int:
        bound = wmax * C.dot(base.divisor([a, b]))
        if extra_load is not None:
            bound += extra_load(a, b)
        return bound

    checks = []
    a0, b0 = corner
    checks.append(CurveCaseCheck(
        f"ProperIntersection({a0},{b0})", load(a0, b0), _pair(S, A, a0, b0),
        _pair(S, A, a0, b0) - load(a0, b0) >= 1))
    for (da, db) in dirs:
        if (da, db) == corner:
            continue
        checks.append(CurveCaseCheck(
            f"ProperIntersection({da},{db})", load(da, db), _pair(S, A, da, db),
            _pair(S, A, da, db) - load(da, db) >= 0))
    return checks


def _equals_c_check(S: SurfaceModel, A: DivisorClass,
                    weights: list[int]) -> CurveCaseCheck:
    cx, cy = _base_anticanonical(S.e)
    lhs = sum(weights)
    rhs = _pair(S, A, cx, cy)
    return CurveCaseCheck("EqualsC", lhs, rhs, rhs - lhs >= 1)


def nakai_certificate(ex: ExampleFamily) -> AmpleCertificate:
    """Closed-form sufficiency certificate that the polarization is ample.

    Dispatches on the family; every check is recomputed from the instance's
    actual intersection numbers, so perturbed polarizations get an honest
    re-evaluation rather than a cached verdict.
    """
    S, A = ex.surface, ex.A
    fid = ex.id

    if fid == "1.11":
        checks = [CurveCaseCheck("ProperIntersection(1)", 0, A.coeffs[0],
                                 A.coeffs[0] >= 1)]
        return AmpleCertificate(fid, A.dot(A), (), tuple(checks), ())

    if fid == "1.12":
        c0 = A.dot(S.divisor([1, 0]))
        f = A.dot(S.divisor([0, 1]))
        checks = [
            CurveCaseCheck("FiberSpecial(C0)", 0, c0, c0 >= 1),
            CurveCaseCheck("FiberSpecial(f)", 0, f, f >= 1),
        ]
        return AmpleCertificate(fid, A.dot(A), (), tuple(checks), ())

    if fid in ("1.16", "1.17", "1.19", "1.20"):
        _require(ex, "on_smooth_anticanonical")
        if fid == "1.17":
            _require(ex, "away_from_min_section")
        else:
            _require(ex, "distinct_fibers")
        return _points_on_c_certificate(ex)

    if fid == "1.18":
        _require(ex, "complete_intersection_of_cubics")
        return _elliptic_pencil_certificate(ex)

    # 1.13/1.14/1.15/Obs1.4: ampleness is attested, not certified here
    raise CertificateRefused(fid, "on_smooth_anticanonical")


def _points_on_c_certificate(ex: ExampleFamily) -> AmpleCertificate:
    S, A = ex.surface, ex.A
    e = S.e
    l = S.l or 0
    weights = _weights(S, A)
    wmax = max(weights, default=0)
    checks: list[CurveCaseCheck] = []
    assumptions = ["on_smooth_anticanonical"]

    if ex.id == "1.20":
        # one point carries double weight: bound the heaviest point's load by
        # its fiber cap and everything else by the second-highest weight
        assumptions.append("distinct_fibers")
        top = sorted(weights, reverse=True)
        w1, w2 = top[0], top[1]

        checks += _cone_cases(
            S, A, w2, corner=(1, 1), dirs=((1, 0), (0, 1)),
            extra_load=lambda a, b: (w1 - w2) * a)
        for (fa, fb), tag in (((1, 0), "f1"), ((0, 1), "f2")):
            rhs = _pair(S, A, fa, fb)
            lhs = _top_sum(weights, 1)
            checks.append(CurveCaseCheck(f"FiberSpecial({tag})", lhs, rhs,
                                         rhs - lhs >= 1))
        checks.append(_equals_c_check(S, A, weights))
        return AmpleCertificate(ex.id, A.dot(A), tuple(weights), tuple(checks),
                                tuple(assumptions))

    if e == 0:
        assumptions.append("distinct_fibers")
        checks += _cone_cases(S, A, wmax, corner=(1, 1), dirs=((1, 0), (0, 1)))
        for (fa, fb), tag in (((1, 0), "f1"), ((0, 1), "f2")):
            rhs = _pair(S, A, fa, fb)
            lhs = _top_sum(weights, 1)
            checks.append(CurveCaseCheck(f"FiberSpecial({tag})", lhs, rhs,
                                         rhs - lhs >= 1))
    else:
        corner = (1, e)
        checks += _cone_cases(S, A, wmax, corner=corner, dirs=(corner, (0, 1)))
        # the negative section: points on it are capped by C.C0 (or excluded)
        cfg = S.config
        if cfg.away_from_min_section:
            assumptions.append("away_from_min_section")
            c0_budget = 0
        else:
            c0_budget = max(0, 2 - e)
        lhs = _top_sum(weights, c0_budget)
        rhs = _pair(S, A, 1, 0)
        checks.append(CurveCaseCheck("FiberSpecial(C0)", lhs, rhs,
                                     rhs - lhs >= 1))
        # a fiber meets C twice, once per fiber if fibers are distinct
        if cfg.distinct_fibers:
            assumptions.append("distinct_fibers")
            fiber_budget = 1
        else:
            fiber_budget = 2
        lhs = _top_sum(weights, fiber_budget)
        rhs = _pair(S, A, 0, 1)
        checks.append(CurveCaseCheck("FiberSpecial(f)", lhs, rhs,
                                     rhs - lhs >= 1))
    checks.append(_equals_c_check(S, A, weights))
    # dedupe assumption order, keep stable
    seen = tuple(dict.fromkeys(assumptions))
    return AmpleCertificate(ex.id, A.dot(A), tuple(weights), tuple(checks), seen)


def _fibration_span(S: SurfaceModel, A: DivisorClass) -> tuple[int, int] | None:
    """Write A = alpha * section + beta * fiber on the 9-point pencil blow-up,
    if A lies in that rank-2 span; otherwise None."""
    F = -canonical_class(S)
    E = S.exceptional(8)
    c = A.coeffs
    if c[0] % 3:
        return None
    beta = c[0] // 3
    alpha = c[9] + beta
    if (alpha * E + beta * F).coeffs != c:
        return None
    return alpha, beta


def _elliptic_pencil_certificate(ex: ExampleFamily) -> AmpleCertificate:
    S, A = ex.surface, ex.A
    weights = _weights(S, A)
    span = _fibration_span(S, A)
    if span is None:
        checks = (CurveCaseCheck("ProperIntersection(span)", 1, 0, False),)
        return AmpleCertificate(ex.id, A.dot(A), tuple(weights), checks,
                                ("complete_intersection_of_cubics",))
    alpha, beta = span
    fiber_value = A.dot(-canonical_class(S))
    section_value = A.dot(S.exceptional(8))
    checks = (
        CurveCaseCheck("FiberSpecial(F)", 0, fiber_value, fiber_value >= 1),
        CurveCaseCheck("EqualsC", 0, section_value, section_value >= 1),
        # any other irreducible curve T has section.T >= 0 and fiber.T >= 1,
        # so A.T = alpha*(section.T) + beta*(fiber.T) >= beta when alpha >= 0
        CurveCaseCheck("ProperIntersection(0,1)", 0, beta,
                       alpha >= 0 and beta >= 1),
    )
    return AmpleCertificate(ex.id, A.dot(A), tuple(weights), checks,
                            ("complete_intersection_of_cubics",))


# --- brute-force oracle ----------------------------------------------------


@dataclass(frozen=True)
class OracleResult:
    min_value: int
    argmin: tuple
    box: int
    candidates: int

    def to_json(self) -> dict:
        return {"min_value": self.min_value, "argmin": list(self.argmin),
                "box": self.box, "candidates": self.candidates}


def _greedy_load(weights: list[int], caps: list[int], budget: int) -> tuple[int, tuple[int, ...]]:
    """Maximum of sum(w_i * m_i) with 0 <= m_i <= cap_i, sum(m_i) <= budget.

    Greedy by descending weight (ties by index) is exact here; returns the
    maximum and its canonical assignment.
    """
    order = sorted(range(len(weights)), key=lambda i: (-weights[i], i))
    m = [0] * len(weights)
    left = budget
    total = 0
    for i in order:
        if left <= 0:
            break
        if weights[i] <= 0:
            break
        take = min(caps[i], left)
        if take > 0:
            m[i] = take
            left -= take
            total += weights[i] * take
    return total, tuple(m)


def _cone_min(S_base: SurfaceModel, D: DivisorClass, box: int):
    """Minimum of D.T over the irreducible-capable classes of a bare base."""
    cands: list[tuple[int, tuple]] = []
    if S_base.kind == KIND_P2:
        line = S_base.divisor([1])
        for d in range(1, box + 1):
            cands.append((D.dot(d * line), ("base", d)))
    else:
        e = S_base.e
        cands.append((D.dot(S_base.divisor([1, 0])), ("base", 1, 0)))
        cands.append((D.dot(S_base.divisor([0, 1])), ("base", 0, 1)))
        for a in range(1, box + 1):
            for b in range(max(1, a * e), box + 1):
                cands.append((D.dot(S_base.divisor([a, b])), ("base", a, b)))
    value, key = min(cands)
    return value, key, len(cands)


def _points_candidates(S: SurfaceModel, A: DivisorClass, box: int):
    """Candidate (value, key) pairs for a blow-up with points on the smooth
    anticanonical curve of the base."""
    cfg = S.config
    l = S.l or 0
    weights = _weights(S, A)
    cands: list[tuple[int, tuple]] = []
    for i in range(l):
        cands.append((weights[i], ("E", i)))

    if S.kind == KIND_P2:
        c_class = (3,)
        if box < 3:
            raise OracleBoxError("box must reach the cubic class (>= 3)")
        for d in range(1, box + 1):
            caps = [max(1, d - 1)] * l
            budget = 3 * d
            load, m = _greedy_load(weights, caps, budget)
            value = d * A.coeffs[0] - load
            cands.append((value, ("D", d, 0, m)))
        load = sum(weights)
        value = 3 * A.coeffs[0] - load
        cands.append((value, ("C", tuple([1] * l))))
        return cands, weights

    e = S.e
    cx, cy = _base_anticanonical(e)
    if box < max(2, cy):
        raise OracleBoxError(
            f"box must reach the anticanonical base class (>= {max(2, cy)})")
    base = SurfaceModel.hirzebruch(e)
    C = base.divisor([cx, cy])

    def add_class(a: int, b: int, caps: list[int], budget: int) -> None:
        budget = max(0, min(budget, sum(caps)))
        load, m = _greedy_load(weights, caps, budget)
        cands.append((_pair(S, A, a, b) - load, ("D", a, b, m)))

    if e == 0:
        ruling_budget = 1 if cfg.distinct_fibers else 2
        add_class(1, 0, [1] * l, ruling_budget)
        add_class(0, 1, [1] * l, ruling_budget)
        for a in range(1, box + 1):
            for b in range(1, box + 1):
                add_class(a, b, [min(a, b)] * l, C.dot(base.divisor([a, b])))
    else:
        c0_budget = 0 if cfg.away_from_min_section else max(0, 2 - e)
        add_class(1, 0, [1] * l, c0_budget)
        fiber_budget = 1 if cfg.distinct_fibers else 2
        add_class(0, 1, [1] * l, fiber_budget)
        for a in range(1, box + 1):
            for b in range(a * e, box + 1):
                add_class(a, b, [a] * l, C.dot(base.divisor([a, b])))
    cands.append((_pair(S, A, cx, cy) - sum(weights), ("C", tuple([1] * l))))
    return cands, weights


def _points_min(S: SurfaceModel, A: DivisorClass, box: int):
    cands, _ = _points_candidates(S, A, box)
    value, key = min(cands)
    return value, key, len(cands)


def _pencil_min(S: SurfaceModel, A: DivisorClass, box: int):
    span = _fibration_span(S, A)
    if span is None:
        raise OracleNotApplicable(
            "polarization leaves the section/fiber span; the admissible-curve "
            "model only covers that span")
    alpha, beta = span
    cands: list[tuple[int, tuple]] = []
    for i in range(9):
        cands.append((A.dot(S.exceptional(i)), ("E", i)))
    cands.append((A.dot(-canonical_class(S)), ("F",)))
    for x in range(0, box + 1):
        for y in range(1, box + 1):
            cands.append((alpha * x + beta * y, ("T", x, y)))
    value, key = min(cands)
    return value, key, len(cands)


def ample_oracle(S: SurfaceModel, D: DivisorClass, box: int | None = None) -> OracleResult:
    """Exhaustively minimize D.T over the admissible curve classes of S.

    A positive minimum certifies ampleness within the model; the search is
    deterministic (canonical tie-breaking) and exact.
    """
    box = default_box() if box is None else box
    if box < 1:
        raise OracleBoxError(f"box must be >= 1, got {box}")
    if not S.is_blow_up:
        value, key, count = _cone_min(S, D, box)
        return OracleResult(value, key, box, count)
    cfg = S.config
    if (S.l or 0) == 0:
        base = (SurfaceModel.projective_plane() if S.kind == KIND_P2
                else SurfaceModel.hirzebruch(S.e))
        value, key, count = _cone_min(base, base.divisor(D.coeffs[:base.rank]), box)
        return OracleResult(value, key, box, count)
    if cfg.complete_intersection_of_cubics and S.kind == KIND_P2 and S.l == 9:
        value, key, count = _pencil_min(S, D, box)
        return OracleResult(value, key, box, count)
    if cfg.on_smooth_anticanonical:
        value, key, count = _points_min(S, D, box)
        return OracleResult(value, key, box, count)
    raise OracleNotApplicable(
        "no admissible-curve model for this point configuration")


def brute_force_ample_oracle(ex: ExampleFamily, box: int | None = None) -> OracleResult:
    """Family-aware entry point for the exhaustive ampleness search."""
    if ex.id in ("1.13", "1.14", "1.15", "Obs1.4"):
        raise OracleNotApplicable(
            f"{ex.id}: ampleness is attested for this configuration; no "
            "admissible-curve model is available")
    return ample_oracle(ex.surface, ex.A, box)


# --- verification ----------------------------------------------------------


@dataclass(frozen=True)
class ClaimResult:
    quantity: str
    expected: int
    actual: int
    ok: bool


@dataclass(frozen=True)
class VerifyReport:
    family: str
    params: tuple[tuple[str, int], ...]
    claims: tuple[ClaimResult, ...]
    certificate: AmpleCertificate | None
    certificate_refused: str | None
    oracle: OracleResult | None
    oracle_note: str | None
    np_verdict: NpVerdict
    np_expected: tuple[str, int | None]
    fixture_checked: bool
    failures: tuple[str, ...] = ()

    @property
    def ample_verdict(self) -> bool | None:
        if self.certificate is None or self.oracle is None:
            return None
        return self.certificate.valid and self.oracle.min_value >= 1

    @property
    def agreement_ok(self) -> bool:
        if self.certificate is None or self.oracle is None:
            return True
        return self.certificate.valid == (self.oracle.min_value >= 1)

    @property
    def np_ok(self) -> bool:
        return (self.np_verdict.status, self.np_verdict.p) == self.np_expected

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "params": dict(self.params),
            "claims": [dataclasses.asdict(c) for c in self.claims],
            "certificate": (None if self.certificate is None
                            else self.certificate.to_json()),
            "certificate_refused": self.certificate_refused,
            "oracle": None if self.oracle is None else self.oracle.to_json(),
            "oracle_note": self.oracle_note,
            "np_verdict": self.np_verdict.to_json(),
            "np_expected": {"status": self.np_expected[0],
                            "p": self.np_expected[1]},
            "ample": self.ample_verdict,
            "agreement_ok": self.agreement_ok,
            "passed": self.passed,
            "fixture_checked": self.fixture_checked,
            "failures": list(self.failures),
        }


@lru_cache(maxsize=1)
def _fixture_table() -> dict:
    data = resources.files("npsurf").joinpath("data/examples.json").read_text()
    return json.loads(data)


def fixture_instance(family_id: str, instance_key: str) -> dict | None:
    table = _fixture_table()
    fam = table["families"].get(family_id)
    if fam is None:
        return None
    return fam["instances"].get(instance_key)


def verify_example(family_id: str, params: dict | None = None, *,
                   box: int | None = None, strict: bool = True,
                   check_fixture: bool = True) -> VerifyReport:
    """Recompute every claim of one family instance and cross-check it.

    Raises ``VerificationError`` naming the first failing quantity when
    ``strict`` (the default); otherwise returns the report with failures
    recorded.
    """
    ex = build_example(family_id, params)

    claims = []
    for claim in ex.claims:
        actual = claim.compute(ex.surface, ex.A)
        claims.append(ClaimResult(claim.quantity, claim.expected, actual,
                                  actual == claim.expected))

    certificate = refused = None
    try:
        certificate = nakai_certificate(ex)
    except CertificateRefused as exc:
        refused = str(exc)

    oracle = oracle_note = None
    try:
        oracle = brute_force_ample_oracle(ex, box)
    except OracleNotApplicable as exc:
        oracle_note = str(exc)

    verdict = np_classify(ex.surface, ex.A, dict(ex.np_flags))

    failures = []
    where = f"{ex.id}[{ex.instance_key}]"
    for c in claims:
        if not c.ok:
            failures.append(f"{where}: claim {c.quantity!r} expected "
                            f"{c.expected}, recomputed {c.actual}")
    if (verdict.status, verdict.p) != ex.np_expected:
        failures.append(f"{where}: syzygy verdict ({verdict.status}, "
                        f"{verdict.p}) != expected {ex.np_expected}")
    if certificate is not None and oracle is not None:
        if certificate.valid != (oracle.min_value >= 1):
            failures.append(
                f"{where}: certificate validity {certificate.valid} disagrees "
                f"with oracle minimum {oracle.min_value}")
        if not certificate.valid:
            failures.append(f"{where}: certificate failed on the unperturbed "
                            "polarization")

    ample_verdict = None
    if certificate is not None and oracle is not None:
        ample_verdict = certificate.valid and oracle.min_value >= 1

    if check_fixture:
        pin = fixture_instance(ex.id, ex.instance_key)
        if pin is None:
            failures.append(f"{where}: no fixture entry")
        else:
            for c in claims:
                pinned = pin["claims"].get(c.quantity)
                if pinned != c.actual:
                    failures.append(f"{where}: claim {c.quantity!r} fixture "
                                    f"pins {pinned}, recomputed {c.actual}")
            if [pin["np"]["status"], pin["np"]["p"]] != [verdict.status,
                                                         verdict.p]:
                failures.append(
                    f"{where}: fixture syzygy pin {pin['np']} != verdict "
                    f"({verdict.status}, {verdict.p})")
            if pin.get("ample") is not None and pin["ample"] != ample_verdict:
                failures.append(f"{where}: fixture ampleness pin "
                                f"{pin['ample']} != {ample_verdict}")
            pinned_ann = pin.get("annotations", {})
            if pinned_ann != {k: v for k, v in ex.annotations}:
                failures.append(f"{where}: annotation table drifted")

    report = VerifyReport(
        family=ex.id, params=ex.params, claims=tuple(claims),
        certificate=certificate, certificate_refused=refused,
        oracle=oracle, oracle_note=oracle_note,
        np_verdict=verdict, np_expected=ex.np_expected,
        fixture_checked=check_fixture, failures=tuple(failures),
    )
    if failures and strict:
        raise VerificationError("; ".join(failures))
    return report


def sweep_family(family_id: str, *, box: int | None = None,
                 strict: bool = True) -> list[VerifyReport]:
    """Verify every instance of a family over its full stated range."""
    if family_id not in FAMILY_SWEEPS:
        raise FamilyError(f"unknown family id {family_id!r}")
    return [verify_example(family_id, params, box=box, strict=strict)
            for params in FAMILY_SWEEPS[family_id]]


def mutate_polarization(ex: ExampleFamily, index: int, delta: int) -> ExampleFamily:
    """Perturb one exceptional coefficient of the polarization by delta."""
    if not 0 <= index < (ex.surface.l or 0):
        raise FamilyError(f"no exceptional index {index}")
    return ex.with_polarization(ex.A + delta * ex.surface.exceptional(index))
