"""Exact scalar arithmetic over Q, prime fields F_p, and Galois fields F_{p^k},
plus the ring endomorphisms of these fields (identity and Frobenius powers).

Everything is exact: rationals are `fractions.Fraction`, finite-field elements
are canonical residues. No floating point is accepted anywhere.

Internal raw-value model (the matrix layer computes on raw values directly):

  rational -> fractions.Fraction
  prime    -> int residue in [0, p)
  galois   -> int in [0, q) encoding the residue polynomial sum(c_i * x^i) as
              sum(c_i * p^i), i.e. base-p digits in ascending power order

The public `Scalar` wrapper pairs a raw value with its owning field and
supports the usual operators. Galois multiplication uses discrete log/antilog
tables (built once per field for orders up to `_LOG_TABLE_LIMIT`), falling
back to polynomial arithmetic modulo the field's irreducible modulus.
"""

from fractions import Fraction

from .errors import UnsupportedInput

_LOG_TABLE_LIMIT = 4096
_IRREDUCIBILITY_SCAN_LIMIT = 100_000

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n):
    """Deterministic Miller-Rabin for the desk-scale integers used here."""
    if n < 2:
        return False
    for small in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n == small:
            return True
        if n % small == 0:
            return False
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _poly_trim(coeffs):
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_divmod(num, den, p):
    """Quotient/remainder of polynomials over F_p (coefficient lists, ascending)."""
    num = _poly_trim(num)
    den = _poly_trim(den)
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    inv_lead = pow(den[-1], p - 2, p)
    quot = [0] * max(0, len(num) - len(den) + 1)
    rem = list(num)
    while len(rem) >= len(den) and _poly_trim(rem):
        shift = len(rem) - len(den)
        factor = rem[-1] * inv_lead % p
        if factor:
            quot[shift] = factor
            for i, d in enumerate(den):
                rem[shift + i] = (rem[shift + i] - factor * d) % p
        rem.pop()
    return quot, _poly_trim(rem)


def is_irreducible(modulus, p):
    """Trial factorization: no monic divisor of degree 1..deg/2 over F_p."""
    coeffs = [c % p for c in modulus]
    coeffs = _poly_trim(coeffs)
    k = len(coeffs) - 1
    if k < 1:
        return False
    if k == 1:
        return True
    for d in range(1, k // 2 + 1):
        if p ** d > _IRREDUCIBILITY_SCAN_LIMIT:
            raise ValueError(f"irreducibility scan too large for p={p}, degree {d}")
        for tail in range(p ** d):
            div = _digits(tail, p, d) + [1]
            _, rem = _poly_divmod(coeffs, div, p)
            if not rem:
                return False
    return True


def _digits(value, p, width):
    out = []
    for _ in range(width):
        out.append(value % p)
        value //= p
    return out


def _undigits(digits, p):
    out = 0
    for c in reversed(digits):
        out = out * p + c
    return out


class Field:
    """An exact field: Q (`rational`), F_p (`prime`), or F_{p^k} (`galois`).

    Galois fields are polynomial residues modulo a caller-supplied monic
    irreducible; there is no built-in polynomial table, every modulus is
    checked at construction. Characteristic-2 fields are constructible (the
    diamond product is meaningful there) but every halving operation — and
    with it the circ product — rejects them.
    """

    def __init__(self, kind, p=0, k=1, modulus=None):
        if kind not in ("rational", "prime", "galois"):
            raise ValueError(f"unknown field kind {kind!r}")
        if kind == "rational":
            if p not in (0, None) or k != 1 or modulus is not None:
                raise ValueError("rational field takes no p/k/modulus")
            p, k, modulus = 0, 1, None
        elif kind == "prime":
            if not is_prime(p):
                raise ValueError(f"p={p} is not prime")
            if k != 1:
                raise ValueError("k >= 2 requires kind='galois'")
            if modulus is not None:
                raise ValueError("prime field takes no modulus")
        else:
            if not is_prime(p):
                raise ValueError(f"p={p} is not prime")
            if k < 2:
                raise ValueError("galois fields need extension degree k >= 2")
            if modulus is None:
                modulus = _find_irreducible(p, k)
            modulus = [c % p for c in modulus]
            if len(modulus) != k + 1 or modulus[-1] != 1:
                raise ValueError("modulus must be monic of degree k (ascending coefficients)")
            if not is_irreducible(modulus, p):
                raise ValueError(f"modulus {modulus} is reducible over F_{p}")
        self.kind = kind
        self.p = p
        self.k = k
        self.modulus = tuple(modulus) if modulus is not None else None
        self.order = p ** k if kind != "rational" else None
        self.char = p
        self._log = None
        self._exp = None
        self._frob_cache = {}
        if kind == "galois" and self.order <= _LOG_TABLE_LIMIT:
            self._build_log_tables()

    # -- identity / hashing -------------------------------------------------

    def _key(self):
        return (self.kind, self.p, self.k, self.modulus)

    def __eq__(self, other):
        return isinstance(other, Field) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"Field({self.name()})"

    def name(self):
        if self.kind == "rational":
            return "Q"
        if self.kind == "prime":
            return f"F{self.p}"
        return f"F{self.order}"

    @property
    def is_finite(self):
        return self.kind != "rational"

    @property
    def char2(self):
        return self.p == 2

    # -- raw arithmetic -----------------------------------------------------

    @property
    def zero(self):
        return Fraction(0) if self.kind == "rational" else 0

    @property
    def one(self):
        return Fraction(1) if self.kind == "rational" else 1

    def add(self, a, b):
        if self.kind == "rational":
            return a + b
        if self.kind == "prime":
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        p, out, mult = self.p, 0, 1
        for _ in range(self.k):
            out += ((a + b) % p) * mult
            a //= p
            b //= p
            mult *= p
        return out

    def neg(self, a):
        if self.kind == "rational":
            return -a
        if self.kind == "prime":
            return -a % self.p
        if self.p == 2:
            return a
        p, out, mult = self.p, 0, 1
        for _ in range(self.k):
            out += (-a % p) * mult
            a //= p
            mult *= p
        return out

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if self.kind == "rational":
            return a * b
        if self.kind == "prime":
            return a * b % self.p
        if self._exp is not None:
            if a == 0 or b == 0:
                return 0
            return self._exp[self._log[a] + self._log[b]]
        return self._poly_mul(a, b)

    def inv(self, a):
        if not a:
            raise ZeroDivisionError(f"inverse of zero in {self.name()}")
        if self.kind == "rational":
            return 1 / a
        if self.kind == "prime":
            return pow(a, self.p - 2, self.p)
        if self._exp is not None:
            return self._exp[(self.order - 1 - self._log[a]) % (self.order - 1)]
        return self.pow_raw(a, self.order - 2)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def halve(self, a):
        if self.p == 2:
            raise UnsupportedInput("halving is undefined in characteristic 2")
        if self.kind == "rational":
            return a / 2
        return self.mul(a, self.half_one)

    @property
    def half_one(self):
        """Raw value of 1/2 (cached); undefined in characteristic 2."""
        if self.p == 2:
            raise UnsupportedInput("1/2 does not exist in characteristic 2")
        cached = self.__dict__.get("_half_one")
        if cached is None:
            cached = self.inv(self.of(2))
            self.__dict__["_half_one"] = cached
        return cached

    def pow_raw(self, a, e):
        if self.kind == "rational":
            return a ** e
        if self.kind == "prime":
            return pow(a, e, self.p)
        if self._exp is not None and a:
            return self._exp[self._log[a] * e % (self.order - 1)]
        result, base = 1, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def _poly_mul(self, a, b):
        p, k = self.p, self.k
        da = _digits(a, p, k)
        db = _digits(b, p, k)
        prod = [0] * (2 * k - 1)
        for i, ca in enumerate(da):
            if ca:
                for j, cb in enumerate(db):
                    prod[i + j] = (prod[i + j] + ca * cb) % p
        mod = self.modulus
        for i in range(2 * k - 2, k - 1, -1):
            c = prod[i]
            if c:
                prod[i] = 0
                for j in range(k):
                    prod[i - k + j] = (prod[i - k + j] - c * mod[j]) % p
        return _undigits(prod[:k], p)

    def _build_log_tables(self):
        q = self.order
        gen = self._find_generator()
        exp = [1] * (2 * (q - 1))
        log = [0] * q
        acc = 1
        for i in range(q - 1):
            exp[i] = acc
            log[acc] = i
            acc = self._poly_mul(acc, gen)
        for i in range(q - 1, 2 * (q - 1)):
            exp[i] = exp[i - (q - 1)]
        self._exp = exp
        self._log = log

    def _find_generator(self):
        q = self.order
        factors = set()
        m = q - 1
        f = 2
        while f * f <= m:
            while m % f == 0:
                factors.add(f)
                m //= f
            f += 1
        if m > 1:
            factors.add(m)

        def pw(a, e):
            result, base = 1, a
            while e:
                if e & 1:
                    result = self._poly_mul(result, base)
                base = self._poly_mul(base, base)
                e >>= 1
            return result

        for cand in range(2, q):
            if all(pw(cand, (q - 1) // f) != 1 for f in factors):
                return cand
        raise RuntimeError("no multiplicative generator found (impossible for a field)")

    # -- coercion and element access -----------------------------------------

    def of(self, x):
        """Coerce `x` to a raw value. Ints embed via the prime subfield;
        galois fields additionally accept ascending coefficient sequences."""
        if isinstance(x, Scalar):
            if x.field != self:
                raise ValueError(f"scalar from {x.field.name()} used in {self.name()}")
            return x.value
        if isinstance(x, float):
            raise TypeError("floats are not exact; use int, Fraction, or a string")
        if self.kind == "rational":
            return Fraction(x)
        if isinstance(x, str):
            x = int(x)
        if isinstance(x, int):
            return x % self.p if self.kind == "prime" else _undigits([x % self.p], self.p)
        if self.kind == "galois" and isinstance(x, (list, tuple)):
            if len(x) > self.k:
                raise ValueError(f"coefficient list longer than degree {self.k}")
            return _undigits([int(c) % self.p for c in x], self.p)
        raise TypeError(f"cannot coerce {x!r} into {self.name()}")

    def scalar(self, x):
        return Scalar(self, self.of(x))

    def elements(self):
        """Iterate every raw value (finite fields only)."""
        if not self.is_finite:
            raise ValueError("cannot enumerate the rationals")
        return range(self.order)

    def random_raw(self, rng):
        """Seeded random raw value; rationals are bounded fractions."""
        if self.is_finite:
            return rng.randrange(self.order)
        return Fraction(rng.randint(-20, 20), rng.randint(1, 12))

    def frob_table(self, e):
        """Table of x -> x^(p^e) over all raw values (finite fields only)."""
        if not self.is_finite:
            raise ValueError("Frobenius tables need a finite field")
        e %= self.k
        table = self._frob_cache.get(e)
        if table is None:
            step = self.p ** e
            table = [self.pow_raw(v, step) for v in range(self.order)]
            self._frob_cache[e] = table
        return table

    def coeffs(self, raw):
        """Ascending coefficient list of a galois raw value."""
        if self.kind != "galois":
            raise ValueError("coefficient view is galois-only")
        return _digits(raw, self.p, self.k)


def _find_irreducible(p, k):
    for tail in range(p ** k):
        cand = _digits(tail, p, k) + [1]
        if is_irreducible(cand, p):
            return cand
    raise RuntimeError("no irreducible polynomial found (impossible)")


class Scalar:
    """A field element: raw value plus owning field, with operator support."""

    __slots__ = ("field", "value")

    def __init__(self, field, raw):
        self.field = field
        self.value = raw

    def _coerce(self, other):
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise ValueError("scalars from different fields")
            return other.value
        return self.field.of(other)

    def __add__(self, other):
        return Scalar(self.field, self.field.add(self.value, self._coerce(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return Scalar(self.field, self.field.sub(self.value, self._coerce(other)))

    def __rsub__(self, other):
        return Scalar(self.field, self.field.sub(self._coerce(other), self.value))

    def __mul__(self, other):
        return Scalar(self.field, self.field.mul(self.value, self._coerce(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return Scalar(self.field, self.field.div(self.value, self._coerce(other)))

    def __rtruediv__(self, other):
        return Scalar(self.field, self.field.div(self._coerce(other), self.value))

    def __neg__(self):
        return Scalar(self.field, self.field.neg(self.value))

    def __pow__(self, e):
        return Scalar(self.field, self.field.pow_raw(self.value, e))

    def inv(self):
        return Scalar(self.field, self.field.inv(self.value))

    def halve(self):
        return Scalar(self.field, self.field.halve(self.value))

    @property
    def is_zero(self):
        return not self.value

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.field == other.field and self.value == other.value
        try:
            return self.value == self.field.of(other)
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __str__(self):
        if self.field.kind != "galois":
            return str(self.value)
        terms = []
        for i, c in enumerate(self.field.coeffs(self.value)):
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                x = "x" if i == 1 else f"x^{i}"
                terms.append(x if c == 1 else f"{c}{x}")
        return " + ".join(reversed(terms)) if terms else "0"

    def __repr__(self):
        return f"Scalar({self} : {self.field.name()})"


class RingEndo:
    """A ring endomorphism of the field: x -> x^(p^e), with e = 0 the identity.

    Q and F_p admit only the identity; F_{p^k} has exactly k Frobenius powers.
    All of these are automatically additive, multiplicative, and injective.
    """

    __slots__ = ("field", "e")

    def __init__(self, field, e=0):
        if field.is_finite:
            e %= field.k
        elif e != 0:
            raise ValueError("Q admits only the identity endomorphism")
        self.field = field
        self.e = e

    @property
    def is_identity(self):
        return self.e == 0

    def apply_raw(self, raw):
        if self.e == 0:
            return raw
        return self.field.frob_table(self.e)[raw]

    def __call__(self, scalar):
        if scalar.field != self.field:
            raise ValueError("scalar belongs to a different field")
        return Scalar(self.field, self.apply_raw(scalar.value))

    def describe(self):
        if self.is_identity:
            return {"kind": "identity"}
        return {"kind": "frobenius", "e": self.e}

    def __eq__(self, other):
        return isinstance(other, RingEndo) and self.field == other.field and self.e == other.e

    def __hash__(self):
        return hash((self.field, self.e))

    def __repr__(self):
        tag = "id" if self.is_identity else f"frob^{self.e}"
        return f"RingEndo({tag} on {self.field.name()})"


# -- module-level operations -------------------------------------------------


def field_make(kind, p=0, k=1, modulus=None):
    """Construct and validate a field (primality and irreducibility checked)."""
    return Field(kind, p=p, k=k, modulus=modulus)


def rational_field():
    return Field("rational")


def prime_field(p):
    return Field("prime", p=p)


def galois_field(p, k, modulus=None):
    return Field("galois", p=p, k=k, modulus=modulus)


def endo_apply(omega, a):
    """Apply a ring endomorphism to a scalar."""
    return omega(a)


def endo_enumerate(field):
    """All ring endomorphisms: k Frobenius powers for F_{p^k}, else identity only."""
    if field.kind == "galois":
        return [RingEndo(field, e) for e in range(field.k)]
    return [RingEndo(field, 0)]


# Named presets used by the CLI. The F9 and F25 moduli are verified irreducible
# at construction (x^2+1 has no root mod 3; x^2+2 has no root mod 5).
def preset_field(name):
    """Resolve a field preset: Q, F2, F3, F5, F7, F9, F25, p:<prime>, gf:<p>:<k>."""
    fixed = {
        "Q": lambda: rational_field(),
        "F2": lambda: prime_field(2),
        "F3": lambda: prime_field(3),
        "F5": lambda: prime_field(5),
        "F7": lambda: prime_field(7),
        "F9": lambda: galois_field(3, 2, [1, 0, 1]),
        "F25": lambda: galois_field(5, 2, [2, 0, 1]),
    }
    if name in fixed:
        return fixed[name]()
    if name.startswith("p:"):
        return prime_field(int(name[2:]))
    if name.startswith("gf:"):
        parts = name.split(":")
        if len(parts) != 3:
            raise ValueError(f"expected gf:<p>:<k>, got {name!r}")
        return galois_field(int(parts[1]), int(parts[2]))
    raise ValueError(f"unknown field preset {name!r}")
