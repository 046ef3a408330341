import json
from fractions import Fraction

import pytest

from jordanmaps import (
    CanonicalForm,
    JordanMap,
    Mat,
    RingEndo,
    Scalar,
    UnsupportedInput,
    certify_identity,
    mat_identity,
    mat_unit,
    preset_field,
    rational_field,
    replay,
)
from jordanmaps.serialization import (
    certificate_from_json,
    certificate_to_json,
    dumps,
    endo_from_json,
    endo_to_json,
    field_from_json,
    field_to_json,
    form_from_json,
    form_to_json,
    map_from_json,
    mat_from_json,
    mat_to_json,
    scalar_from_json,
    scalar_to_json,
    table_to_json,
)

Q = rational_field()
F3 = preset_field("F3")
F5 = preset_field("F5")
F9 = preset_field("F9")


@pytest.mark.parametrize("field", [Q, F3, F5, F9, preset_field("F25")], ids=lambda f: f.name())
def test_field_roundtrip(field):
    assert field_from_json(field_to_json(field)) == field


def test_scalar_roundtrip_rational():
    s = Q.scalar(2) / Q.scalar(3)
    blob = scalar_to_json(s)
    assert blob == "2/3"
    assert scalar_from_json(Q, blob) == s
    assert scalar_from_json(Q, "-7") == Q.scalar(-7)


def test_scalar_roundtrip_galois():
    s = Scalar(F9, 6)
    blob = scalar_to_json(s)
    assert blob == [0, 2]  # ascending coefficients
    assert scalar_from_json(F9, blob) == s


def test_scalar_rejects_garbage():
    with pytest.raises(UnsupportedInput):
        scalar_from_json(F5, "socks")
    with pytest.raises(UnsupportedInput):
        scalar_from_json(F9, [0, 1, 2, 3])


@pytest.mark.parametrize(
    "field,rows",
    [
        (F5, [[1, 2], [3, 4]]),
        (Q, [[Fraction(1, 2), 3], [0, Fraction(-7, 5)]]),
        (F9, [[Scalar(F9, 3), 1], [2, Scalar(F9, 7)]]),
    ],
    ids=["F5", "Q", "F9"],
)
def test_mat_roundtrip(field, rows):
    m = Mat(field, rows)
    blob = mat_to_json(m)
    assert blob["n"] == 2 and blob["m"] == 2
    assert mat_from_json(field, blob) == m


def test_mat_entries_are_row_major():
    blob = mat_to_json(Mat(F5, [[1, 2], [3, 4]]))
    assert blob["entries"] == ["1", "2", "3", "4"]


def test_mat_shape_validation():
    with pytest.raises(UnsupportedInput):
        mat_from_json(F5, {"n": 2, "m": 2, "entries": ["1", "2", "3"]})
    with pytest.raises(UnsupportedInput):
        mat_from_json(F5, {"n": 2, "entries": ["1", "2", "3", "4"]})


def test_certificate_roundtrip():
    cert = certify_identity(Mat(F5, [[1, 2], [3, 4]]))
    blob = certificate_to_json(cert)
    assert blob["schema"] == "1"
    back = certificate_from_json(blob)
    assert back == cert
    assert bool(replay(back))


def test_certificate_schema_enforced():
    cert = certify_identity(Mat(F5, [[1, 2], [3, 4]]))
    blob = certificate_to_json(cert)
    blob["schema"] = "99"
    with pytest.raises(UnsupportedInput):
        certificate_from_json(blob)
    blob = certificate_to_json(cert)
    del blob["field"]
    with pytest.raises(UnsupportedInput):
        certificate_from_json(blob)


def test_table_map_roundtrip():
    base = JordanMap.conjugation(Mat(F3, [[1, 1], [0, 1]]), transpose=True)
    phi = JordanMap.from_table(F3, 2, {x: base(x) for x in base.domain_iter()})
    blob = table_to_json(phi)
    back = map_from_json(blob)
    assert back.n == phi.n and back.m == phi.m and back.mode == phi.mode
    for x in phi.domain_iter():
        assert back(x) == phi(x)


def test_table_map_roundtrip_triangular_domain():
    from jordanmaps import triangular_example

    phi = triangular_example(F5).map
    table = JordanMap.from_table(
        F5, 2, {x: phi(x) for x in phi.domain_iter()}, domain="upper_triangular"
    )
    blob = table_to_json(table)
    assert blob["domain"] == "upper_triangular"
    back = map_from_json(blob)
    assert back.domain == "upper_triangular"
    assert back.domain_size == 125


def test_table_to_json_requires_table_body():
    with pytest.raises(UnsupportedInput):
        table_to_json(JordanMap.conjugation(mat_identity(F5, 2)))


@pytest.mark.parametrize(
    "endo", [None, RingEndo(F9, 0), RingEndo(F9, 1)], ids=["none", "id", "frob"]
)
def test_endo_roundtrip(endo):
    blob = endo_to_json(endo)
    back = endo_from_json(F9, blob)
    if endo is None or endo.is_identity:
        assert back is None or back.is_identity
    else:
        assert back.e == endo.e


def test_form_roundtrips():
    forms = [
        CanonicalForm.zero_form(F5, 2),
        CanonicalForm.constant_form(mat_unit(F5, 2, 1, 1), 2),
        CanonicalForm.conjugation_form(
            Mat(F9, [[1, 2], [1, 1]]), omega=RingEndo(F9, 1), transpose=True
        ),
        CanonicalForm.conjugation_form(Mat(Q, [[1, 2], [0, 1]])),
    ]
    for form in forms:
        back = form_from_json(form_to_json(form))
        assert back.variant == form.variant
        assert back.field == form.field
        assert back.transpose == form.transpose
        x = mat_identity(form.field, form.n) + mat_unit(form.field, form.n, 1, 2)
        assert back.evaluate(x) == form.evaluate(x)


def test_form_with_singular_t_rejected():
    blob = form_to_json(CanonicalForm.conjugation_form(Mat(F5, [[1, 2], [0, 1]])))
    blob["T"]["entries"] = ["1", "2", "2", "4"]
    with pytest.raises(UnsupportedInput):
        form_from_json(blob)


def test_dumps_is_canonical():
    blob = {"b": 1, "a": [2, 3]}
    assert dumps(blob) == dumps(dict(reversed(list(blob.items()))))
    assert json.loads(dumps(blob)) == blob


def test_malformed_top_level():
    for broken in [None, [], "hi", {"schema": "1"}]:
        with pytest.raises(UnsupportedInput):
            certificate_from_json(broken)
