import pytest
from hypothesis import given
from hypothesis import strategies as st

from jordanmaps import (
    RingEndo,
    Scalar,
    UnsupportedInput,
    endo_apply,
    endo_enumerate,
    field_make,
    galois_field,
    preset_field,
    prime_field,
    rational_field,
)

ints = st.integers(min_value=-200, max_value=200)


class TestFieldAxioms:
    @pytest.fixture(params=["Q", "F3", "F5", "F9", "F25"])
    def field(self, request):
        return preset_field(request.param)

    @given(a=ints, b=ints, c=ints)
    def test_ring_laws(self, field, a, b, c):
        x, y, z = field.scalar(a), field.scalar(b), field.scalar(c)

        # commutativity and associativity
        assert x + y == y + x
        assert x * y == y * x
        assert (x + y) + z == x + (y + z)
        assert (x * y) * z == x * (y * z)

        # distributivity and neutral elements
        assert x * (y + z) == x * y + x * z
        assert x + field.scalar(0) == x
        assert x * field.scalar(1) == x
        assert x + (-x) == field.scalar(0)

    @given(a=ints)
    def test_inverse(self, field, a):
        x = field.scalar(a)
        if x.is_zero:
            with pytest.raises((ZeroDivisionError, ValueError)):
                x.inv()
        else:
            assert x * x.inv() == field.scalar(1)

    @given(a=ints)
    def test_halve_doubles_back(self, field, a):
        x = field.scalar(a)
        assert x.halve() + x.halve() == x
        assert x.halve() * field.scalar(2) == x


class TestHalving:
    def test_f5_values(self, f5):
        # 2 * 4 = 8 = 3 and 2 * 3 = 6 = 1 in F_5
        assert f5.halve(3) == 4
        assert f5.halve(1) == 3
        assert f5.half_one == 3

    def test_char2_rejected(self, f2):
        with pytest.raises(UnsupportedInput):
            f2.halve(1)

    def test_f9_half_one(self, f9):
        two = f9.scalar(2)
        assert f9.scalar(1).halve() * two == f9.scalar(1)


def test_f5_inverse_table(f5):
    assert f5.inv(3) == 2
    assert [f5.inv(a) for a in (1, 2, 3, 4)] == [1, 3, 2, 4]


def test_rationals_are_exact(qq):
    third = qq.scalar(1) / qq.scalar(3)
    assert third + third + third == qq.scalar(1)
    assert str(third) == "1/3"


class TestGaloisF9:
    """F_9 = F_3[x] / (x^2 + 1); raw values encode coefficient digits base 3."""

    def test_modulus_and_generator(self, f9):
        x = Scalar(f9, 3)  # digits (0, 1)
        assert f9.coeffs(x.value) == [0, 1]
        assert x * x == f9.scalar(-1)

    def test_frobenius_is_cubing(self, f9):
        frob = RingEndo(f9, 1)
        for raw in f9.elements():
            a = Scalar(f9, raw)
            assert endo_apply(frob, a) == a**3

    def test_frobenius_squared_is_identity(self, f9):
        frob = RingEndo(f9, 1)
        for raw in f9.elements():
            a = Scalar(f9, raw)
            assert endo_apply(frob, endo_apply(frob, a)) == a

    @given(a=ints, b=ints)
    def test_frobenius_is_a_ring_map(self, f9, a, b):
        frob = RingEndo(f9, 1)
        x = Scalar(f9, 3) + f9.scalar(a)
        y = Scalar(f9, 3) * f9.scalar(b)
        assert endo_apply(frob, x + y) == endo_apply(frob, x) + endo_apply(frob, y)
        assert endo_apply(frob, x * y) == endo_apply(frob, x) * endo_apply(frob, y)

    def test_prime_subfield_is_fixed(self, f9):
        frob = RingEndo(f9, 1)
        for c in (0, 1, 2):
            assert endo_apply(frob, f9.scalar(c)) == f9.scalar(c)


class TestEndoEnumeration:
    def test_counts(self, qq, f5, f9):
        assert len(endo_enumerate(qq)) == 1
        assert len(endo_enumerate(f5)) == 1
        assert len(endo_enumerate(f9)) == 2

    def test_identity_flags(self, f9):
        endos = endo_enumerate(f9)
        assert [e.is_identity for e in endos] == [True, False]

    def test_f25_has_two(self):
        f25 = preset_field("F25")
        assert len(endo_enumerate(f25)) == 2
        frob = endo_enumerate(f25)[1]
        for raw in f25.elements():
            assert frob.apply_raw(raw) == f25.pow_raw(raw, 5)


class TestConstruction:
    def test_presets(self):
        assert preset_field("Q").kind == "rational"
        assert preset_field("F7").order == 7
        assert preset_field("F9").order == 9
        assert preset_field("F2").char2

    def test_unknown_preset(self):
        with pytest.raises(ValueError):
            preset_field("F4")

    def test_composite_modulus_rejected(self):
        with pytest.raises(ValueError):
            prime_field(6)

    def test_reducible_polynomial_rejected(self):
        # x^2 - 1 = (x - 1)(x + 1) over F_3
        with pytest.raises(ValueError):
            galois_field(3, 2, modulus=(2, 0, 1))

    def test_field_make_matches_presets(self):
        assert field_make("prime", p=5) == prime_field(5)
        assert field_make("rational") == rational_field()
        assert field_make("galois", p=3, k=2, modulus=(1, 0, 1)) == preset_field("F9")

    def test_equality_distinguishes_fields(self, f3, f5):
        assert f3 != f5
        assert prime_field(3) == f3


def test_scalar_str_galois(f9):
    assert str(Scalar(f9, 6)) == "2x"
    assert str(Scalar(f9, 4)) == "x + 1"
    assert str(Scalar(f9, 0)) == "0"


def test_random_raw_lands_in_field(f5, qq):
    import random

    rng = random.Random(0)
    for _ in range(50):
        assert f5.random_raw(rng) in range(5)
    for _ in range(20):
        qq.scalar(qq.random_raw(rng))  # must not raise
