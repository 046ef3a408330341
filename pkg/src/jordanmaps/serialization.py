"""JSON encodings for fields, scalars, matrices, certificates, map tables,
and canonical forms. Every top-level document carries "schema": "1".

Scalars encode as strings over Q and prime fields ("7/2", "3") and as
ascending coefficient arrays over galois fields ([2, 1] = 2 + x). Matrices
are row-major entry lists with explicit dimensions. Loaders validate
structure and raise UnsupportedInput on anything malformed.
"""

from fractions import Fraction

from ._util import canonical_json
from .errors import UnsupportedInput
from .exact_fields import RingEndo, Scalar, field_make
from .generation import Certificate
from .maps import CIRC, DIAMOND, JordanMap
from .matrices import Mat

SCHEMA = "1"


def _need(obj, key, kinds=None):
    if not isinstance(obj, dict) or key not in obj:
        raise UnsupportedInput(f"missing key {key!r} in JSON object")
    value = obj[key]
    if kinds is not None and not isinstance(value, kinds):
        raise UnsupportedInput(f"key {key!r} has unexpected type {type(value).__name__}")
    return value


def _check_schema(obj):
    if _need(obj, "schema") != SCHEMA:
        raise UnsupportedInput(f"unsupported schema version {obj.get('schema')!r}")


# -- fields --------------------------------------------------------------------


def field_to_json(field):
    if field.kind == "rational":
        return {"kind": "rational"}
    if field.kind == "prime":
        return {"kind": "prime", "p": field.p}
    return {"kind": "galois", "p": field.p, "k": field.k, "modulus": list(field.modulus)}


def field_from_json(obj):
    kind = _need(obj, "kind", str)
    if kind == "rational":
        return field_make("rational")
    if kind == "prime":
        return field_make("prime", p=_need(obj, "p", int))
    if kind == "galois":
        modulus = obj.get("modulus")
        return field_make(
            "galois", p=_need(obj, "p", int), k=_need(obj, "k", int), modulus=modulus
        )
    raise UnsupportedInput(f"unknown field kind {kind!r}")


# -- scalars and matrices --------------------------------------------------------


def scalar_to_json(s):
    f = s.field
    if f.kind == "galois":
        return f.coeffs(s.value)
    return str(s.value)


def scalar_from_json(field, obj):
    if field.kind == "galois":
        if isinstance(obj, (list, str, int)):
            try:
                return field.scalar(obj if isinstance(obj, list) else int(obj))
            except (TypeError, ValueError) as exc:
                raise UnsupportedInput(f"bad galois scalar encoding {obj!r}: {exc}") from exc
        raise UnsupportedInput(f"bad galois scalar encoding {obj!r}")
    if isinstance(obj, (str, int)):
        try:
            return field.scalar(Fraction(obj) if field.kind == "rational" else int(obj))
        except (ValueError, ZeroDivisionError) as exc:
            raise UnsupportedInput(f"bad scalar encoding {obj!r}: {exc}") from exc
    raise UnsupportedInput(f"bad scalar encoding {obj!r}")


def mat_to_json(m):
    return {
        "n": m.nrows,
        "m": m.ncols,
        "entries": [scalar_to_json(Scalar(m.field, v)) for row in m.rows for v in row],
    }


def mat_from_json(field, obj):
    n = _need(obj, "n", int)
    m = _need(obj, "m", int)
    entries = _need(obj, "entries", list)
    if n < 1 or m < 1 or len(entries) != n * m:
        raise UnsupportedInput(f"matrix claims {n}x{m} but carries {len(entries)} entries")
    scalars = [scalar_from_json(field, e) for e in entries]
    rows = [scalars[i * m : (i + 1) * m] for i in range(n)]
    return Mat(field, rows)


# -- certificates ----------------------------------------------------------------


def certificate_to_json(cert):
    return {
        "schema": SCHEMA,
        "field": field_to_json(cert.field),
        "start": mat_to_json(cert.start),
        "steps": [
            {"y": mat_to_json(y), "result": mat_to_json(res)} for y, res in cert.steps
        ],
    }


def certificate_from_json(obj):
    _check_schema(obj)
    field = field_from_json(_need(obj, "field", dict))
    start = mat_from_json(field, _need(obj, "start", dict))
    steps = []
    for step in _need(obj, "steps", list):
        y = mat_from_json(field, _need(step, "y", dict))
        res = mat_from_json(field, _need(step, "result", dict))
        steps.append((y, res))
    return Certificate(start=start, steps=tuple(steps))


# -- map tables ------------------------------------------------------------------


def table_to_json(phi):
    if phi.body_kind != "table":
        raise UnsupportedInput("only table-backed maps serialize to map tables")
    entries = [
        {"x": mat_to_json(x), "fx": mat_to_json(phi(x))} for x in phi.domain_iter()
    ]
    out = {
        "schema": SCHEMA,
        "field": field_to_json(phi.field),
        "n": phi.n,
        "mode": phi.mode,
        "entries": entries,
    }
    if phi.domain != "full":
        out["domain"] = phi.domain
    return out


def map_from_json(obj):
    _check_schema(obj)
    field = field_from_json(_need(obj, "field", dict))
    n = _need(obj, "n", int)
    mode = _need(obj, "mode", str)
    if mode not in (CIRC, DIAMOND):
        raise UnsupportedInput(f"unknown product mode {mode!r}")
    domain = obj.get("domain", "full")
    entries = _need(obj, "entries", list)
    pairs = []
    for entry in entries:
        x = mat_from_json(field, _need(entry, "x", dict))
        fx = mat_from_json(field, _need(entry, "fx", dict))
        pairs.append((x, fx))
    return JordanMap.from_table(field, n, pairs, mode=mode, domain=domain)


# -- endomorphisms and canonical forms --------------------------------------------


def endo_to_json(endo):
    if endo is None or endo.is_identity:
        return {"kind": "identity"}
    return {"kind": "frobenius", "e": endo.e}


def endo_from_json(field, obj):
    kind = _need(obj, "kind", str)
    if kind == "identity":
        return RingEndo(field, 0)
    if kind == "frobenius":
        if not field.is_finite:
            raise UnsupportedInput("frobenius endomorphisms need a finite field")
        return RingEndo(field, _need(obj, "e", int))
    raise UnsupportedInput(f"unknown endomorphism kind {kind!r}")


def form_to_json(form):
    out = {
        "schema": SCHEMA,
        "variant": form.variant,
        "mode": form.mode,
        "field": field_to_json(form.field),
        "n": form.n,
    }
    if form.m != form.n:
        out["m"] = form.m
    if form.variant == "constant_idempotent":
        out["idempotent"] = mat_to_json(form.idempotent)
    if form.variant == "conjugation":
        out["T"] = mat_to_json(form.t)
        out["omega"] = endo_to_json(form.omega)
        out["transpose"] = form.transpose
    return out


def form_from_json(obj):
    from .classifier import CanonicalForm

    _check_schema(obj)
    variant = _need(obj, "variant", str)
    mode = _need(obj, "mode", str)
    if mode not in (CIRC, DIAMOND):
        raise UnsupportedInput(f"unknown product mode {mode!r}")
    field = field_from_json(_need(obj, "field", dict))
    n = _need(obj, "n", int)
    if variant == "zero":
        return CanonicalForm.zero_form(field, n, mode=mode, m=obj.get("m"))
    if variant == "constant_idempotent":
        idem = mat_from_json(field, _need(obj, "idempotent", dict))
        return CanonicalForm.constant_form(idem, n, mode=mode)
    if variant == "conjugation":
        t = mat_from_json(field, _need(obj, "T", dict))
        omega = endo_from_json(field, _need(obj, "omega", dict))
        transpose = bool(obj.get("transpose", False))
        try:
            return CanonicalForm.conjugation_form(t, omega=omega, transpose=transpose, mode=mode)
        except ValueError as exc:
            raise UnsupportedInput(f"conjugation form rejected: {exc}") from exc
    raise UnsupportedInput(f"unknown form variant {variant!r}")


def dumps(obj):
    """Canonical text for any of the JSON documents above."""
    return canonical_json(obj)
