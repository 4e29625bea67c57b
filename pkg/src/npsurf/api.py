"""JSON-in/JSON-out evaluation of every library operation.

``evaluate`` takes ``{"op": <name>, "args": {...}}`` and returns
``{"op": ..., "verdict": ..., "justification": ...}``.  Argument names match
the library signatures; surfaces and divisors are passed in their flat JSON
form.  Unknown ops, unknown argument names, and malformed payloads raise
``ValueError`` subclasses rather than guessing.
"""

from __future__ import annotations

from . import criteria, families, fano, lattice


class ApiError(ValueError):
    pass


def _surface(obj) -> lattice.SurfaceModel:
    if not isinstance(obj, dict):
        raise ApiError("surface must be a JSON object")
    return lattice.SurfaceModel.from_json(obj)


def _divisor(obj) -> lattice.DivisorClass:
    if not isinstance(obj, dict):
        raise ApiError("divisor must be a JSON object")
    return lattice.DivisorClass.from_json(obj)


def _args(request_args: dict, required: tuple[str, ...],
          optional: tuple[str, ...] = ()) -> dict:
    args = dict(request_args or {})
    missing = [k for k in required if k not in args]
    if missing:
        raise ApiError(f"missing args: {missing}")
    unknown = set(args) - set(required) - set(optional)
    if unknown:
        raise ApiError(f"unknown args: {sorted(unknown)}")
    return args


_ARITH_TAG = "exact lattice arithmetic"


def _plain(value, justification=_ARITH_TAG) -> dict:
    return {"verdict": value, "justification": justification}


def _tagged(obj) -> dict:
    payload = obj.to_json()
    return {"verdict": payload,
            "justification": payload.get("justification", _ARITH_TAG)}


# --- op implementations ----------------------------------------------------


def _op_intersect(a):
    a = _args(a, ("d1", "d2"))
    return _plain(lattice.intersect(_divisor(a["d1"]), _divisor(a["d2"])))


def _op_canonical_class(a):
    a = _args(a, ("surface",))
    return _plain(lattice.canonical_class(_surface(a["surface"])).to_json())


def _op_k_squared(a):
    a = _args(a, ("surface",))
    return _plain(lattice.k_squared(_surface(a["surface"])))


def _op_euler_characteristic(a):
    a = _args(a, ("divisor",))
    return _plain(lattice.euler_characteristic(_divisor(a["divisor"])))


def _op_sectional_genus(a):
    a = _args(a, ("divisor",))
    return _plain(lattice.sectional_genus(_divisor(a["divisor"])))


def _op_hodge_index_bound(a):
    a = _args(a, ("a", "b"))
    return _plain(lattice.hodge_index_bound(_divisor(a["a"]), _divisor(a["b"])))


def _op_signature(a):
    a = _args(a, ("surface",))
    return _plain(list(lattice.signature(_surface(a["surface"]))))


def _op_blow_up(a):
    a = _args(a, ("surface", "count", "config"))
    cfg = lattice.PointConfig.from_json(a["config"])
    return _plain(
        lattice.blow_up(_surface(a["surface"]), int(a["count"]), cfg).to_json())


def _op_np_classify(a):
    a = _args(a, ("flags",), ("divisor", "t"))
    if ("divisor" in a) == ("t" in a):
        raise ApiError("pass exactly one of divisor or t")
    if "divisor" in a:
        d = _divisor(a["divisor"])
        verdict = criteria.np_classify(d.surface, d, a["flags"])
    else:
        verdict = criteria.np_classify_degree(int(a["t"]), a["flags"])
    return _tagged(verdict)


def _op_bpf_check(a):
    a = _args(a, ("divisor", "flags"))
    d = _divisor(a["divisor"])
    return _tagged(criteria.bpf_check(d.surface, d, a["flags"]))


def _op_adjoint_very_ample(a):
    a = _args(a, ("ksq", "summands"))
    return _tagged(criteria.adjoint_very_ample(int(a["ksq"]), a["summands"]))


def _op_min_kA_bound(a):
    a = _args(a, ("ksq",), ("summand", "e", "conic_fibration"))
    return _tagged(criteria.min_kA_bound(
        int(a["ksq"]), summand=a.get("summand", "other"),
        e=a.get("e"), conic_fibration=bool(a.get("conic_fibration", False))))


def _op_adjoint_np_min_n(a):
    a = _args(a, ("ksq", "p"), ("e", "exclude"))
    return _tagged(criteria.adjoint_np_min_n(
        int(a["ksq"]), int(a["p"]), e=a.get("e"),
        exclude=tuple(a.get("exclude", ()))))


def _op_reider_np(a):
    a = _args(a, ("ksq", "Lsq", "p"),
              ("minus_k_dot_L", "cond1_attested", "adjoint_very_ample",
               "multiple_of_minus_k"))
    return _tagged(criteria.reider_np(
        int(a["ksq"]), int(a["Lsq"]), int(a["p"]),
        minus_k_dot_L=a.get("minus_k_dot_L"),
        cond1_attested=bool(a.get("cond1_attested", False)),
        adjoint_very_ample=bool(a.get("adjoint_very_ample", False)),
        multiple_of_minus_k=bool(a.get("multiple_of_minus_k", False))))


def _op_lemma_125_bound(a):
    a = _args(a, ("ksq", "Lsq", "p"),
              ("multiple_of_minus_k", "adjoint_effective"))
    bound = criteria.lemma_125_bound(
        int(a["ksq"]), int(a["Lsq"]), int(a["p"]),
        multiple_of_minus_k=bool(a.get("multiple_of_minus_k", False)),
        adjoint_effective=bool(a.get("adjoint_effective", False)))
    return _plain(bound, "Lem 1.25")


def _op_verify_inequality_chain(a):
    a = _args(a, ("p", "m", "ksq"))
    chain = criteria.verify_inequality_chain(int(a["p"]), int(a["m"]),
                                             int(a["ksq"]))
    return _plain(list(chain), "Lem 1.25 chain")


def _op_ampleness_termination(a):
    a = _args(a, ("ksq", "p"),
              ("e", "multiple_of_minus_k", "np_sharp_attested"))
    return _tagged(criteria.ampleness_termination(
        int(a["ksq"]), int(a["p"]), e=a.get("e"),
        multiple_of_minus_k=bool(a.get("multiple_of_minus_k", True)),
        np_sharp_attested=bool(a.get("np_sharp_attested", False))))


def _op_thm_121_equivalence(a):
    a = _args(a, ("ksq",), ("summand", "e"))
    return _tagged(criteria.thm_121_equivalence(
        int(a["ksq"]), summand=a.get("summand", "other"), e=a.get("e")))


def _op_curve_np_reference(a):
    a = _args(a, ("genus", "degree"))
    return _tagged(criteria.curve_np_reference(int(a["genus"]),
                                               int(a["degree"])))


def _op_build_example(a):
    a = _args(a, ("id",), ("params",))
    ex = families.build_example(a["id"], a.get("params"))
    payload = {
        "id": ex.id, "params": dict(ex.params),
        "surface": ex.surface.to_json(), "A": list(ex.A.coeffs),
        "claims": {c.quantity: c.expected for c in ex.claims},
        "np_expected": {"status": ex.np_expected[0], "p": ex.np_expected[1]},
        "annotations": dict(ex.annotations),
    }
    return _plain(payload, "family table")


def _op_nakai_certificate(a):
    a = _args(a, ("id",), ("params",))
    ex = families.build_example(a["id"], a.get("params"))
    cert = families.nakai_certificate(ex)
    return {"verdict": cert.to_json(), "justification": "Nakai curve cases"}


def _op_brute_force_ample_oracle(a):
    a = _args(a, ("id",), ("params", "box"))
    ex = families.build_example(a["id"], a.get("params"))
    result = families.brute_force_ample_oracle(ex, a.get("box"))
    return {"verdict": result.to_json(), "justification": "exhaustive search"}


def _op_ample_oracle(a):
    a = _args(a, ("divisor",), ("box",))
    d = _divisor(a["divisor"])
    result = families.ample_oracle(d.surface, d, a.get("box"))
    return {"verdict": result.to_json(), "justification": "exhaustive search"}


def _op_verify_example(a):
    a = _args(a, ("id",), ("params", "box", "strict"))
    report = families.verify_example(
        a["id"], a.get("params"), box=a.get("box"),
        strict=bool(a.get("strict", True)))
    return {"verdict": report.to_json(), "justification": "family verification"}


def _fano_input(a: dict) -> fano.FanoInput:
    allowed = ("n", "m", "Hn", "h0H", "morphism")
    payload = {k: a[k] for k in allowed if k in a and a[k] is not None}
    return fano.FanoInput(**payload)


def _op_primitive_np(a):
    a = _args(a, ("n", "m", "Hn"), ("h0H", "morphism"))
    return _tagged(fano.primitive_np(_fano_input(a)))


def _op_multiples_np_surface(a):
    a = _args(a, ("profile", "l", "p"))
    return _tagged(fano.multiples_np_surface(a["profile"], int(a["l"]),
                                             int(a["p"])))


def _op_multiples_np_fano(a):
    a = _args(a, ("n", "m", "Hn", "l", "p"), ("h0H", "morphism"))
    f = _fano_input({k: v for k, v in a.items() if k not in ("l", "p")})
    return _tagged(fano.multiples_np_fano(f, int(a["l"]), int(a["p"])))


def _op_index_nm3_n0(a):
    a = _args(a, ("n", "m", "Hn", "k"), ("h0H", "morphism"))
    f = _fano_input({k: v for k, v in a.items() if k != "k"})
    return _tagged(fano.index_nm3_n0(f, int(a["k"])))


def _op_index_nm3_np(a):
    a = _args(a, ("n", "m", "Hn", "k", "p"), ("h0H", "morphism"))
    f = _fano_input({k: v for k, v in a.items() if k not in ("k", "p")})
    return _tagged(fano.index_nm3_np(f, int(a["k"]), int(a["p"])))


_OPS = {
    "intersect": _op_intersect,
    "canonical_class": _op_canonical_class,
    "k_squared": _op_k_squared,
    "euler_characteristic": _op_euler_characteristic,
    "sectional_genus": _op_sectional_genus,
    "hodge_index_bound": _op_hodge_index_bound,
    "signature": _op_signature,
    "blow_up": _op_blow_up,
    "np_classify": _op_np_classify,
    "bpf_check": _op_bpf_check,
    "adjoint_very_ample": _op_adjoint_very_ample,
    "min_kA_bound": _op_min_kA_bound,
    "adjoint_np_min_n": _op_adjoint_np_min_n,
    "reider_np": _op_reider_np,
    "lemma_125_bound": _op_lemma_125_bound,
    "verify_inequality_chain": _op_verify_inequality_chain,
    "ampleness_termination": _op_ampleness_termination,
    "thm_121_equivalence": _op_thm_121_equivalence,
    "curve_np_reference": _op_curve_np_reference,
    "build_example": _op_build_example,
    "nakai_certificate": _op_nakai_certificate,
    "brute_force_ample_oracle": _op_brute_force_ample_oracle,
    "ample_oracle": _op_ample_oracle,
    "verify_example": _op_verify_example,
    "primitive_np": _op_primitive_np,
    "multiples_np_surface": _op_multiples_np_surface,
    "multiples_np_fano": _op_multiples_np_fano,
    "index_nm3_n0": _op_index_nm3_n0,
    "index_nm3_np": _op_index_nm3_np,
}

OPERATIONS = tuple(sorted(_OPS))


def evaluate(request: dict) -> dict:
    """Evaluate one JSON operation request."""
    if not isinstance(request, dict):
        raise ApiError("request must be a JSON object")
    unknown = set(request) - {"op", "args"}
    if unknown:
        raise ApiError(f"unknown request fields: {sorted(unknown)}")
    op = request.get("op")
    if op not in _OPS:
        raise ApiError(f"unknown op {op!r}; known ops: {', '.join(OPERATIONS)}")
    out = _OPS[op](request.get("args", {}))
    return {"op": op, **out}
