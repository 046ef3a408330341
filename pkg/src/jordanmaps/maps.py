"""Map containers and product-preservation checking.

A JordanMap is a function M_n(F) -> M_m(F) tagged with the product it is
meant to preserve: mode "circ" for x o y = (xy + yx)/2, mode "diamond" for
x <> y = xy + yx (the char-2-safe variant). Bodies come in several kinds:

  * table        -- explicit graph over a small finite domain,
  * conjugation  -- X |-> T w(X) T^-1 or T w(X)^t T^-1 with w a ring
                    endomorphism applied entrywise,
  * constant / zero,
  * oracle       -- arbitrary callable (memoized).

Verification budgets are carried by Strategy values so every probabilistic
answer is reproducible from (count, seed).
"""

import random
from dataclasses import dataclass

from .errors import UnsupportedInput
from .matrices import Mat, jordan_circ, jordan_diamond, mat_zero

CIRC = "circ"
DIAMOND = "diamond"

_TABLE_CAP = 10_000
_PAIR_CAP = 10_000_000


@dataclass(frozen=True)
class Strategy:
    """How much checking to do: every pair, or `count` seeded random draws.

    `pairs` optionally gives multiplicativity pre-checks a smaller budget than
    point-wise map comparisons; it defaults to `count`.
    """

    kind: str
    count: int = 1000
    seed: int = 0
    pairs: int = None

    def __post_init__(self):
        if self.kind not in ("exhaustive", "sampled"):
            raise ValueError(f"unknown strategy kind {self.kind!r}")
        if self.kind == "sampled" and self.count < 1:
            raise ValueError("sampled strategy needs count >= 1")

    @staticmethod
    def exhaustive():
        return Strategy(kind="exhaustive")

    @staticmethod
    def sampled(count=1000, seed=0, pairs=None):
        return Strategy(kind="sampled", count=count, seed=seed, pairs=pairs)

    @property
    def pair_budget(self):
        return self.count if self.pairs is None else self.pairs

    def describe(self):
        if self.kind == "exhaustive":
            return "exhaustive"
        return f"sampled:{self.count}:{self.seed}"


def _parse_strategy(text):
    """Parse "exhaustive" or "sampled:N:SEED" (the CLI --verify format)."""
    if text == "exhaustive":
        return Strategy.exhaustive()
    parts = text.split(":")
    if parts[0] == "sampled" and len(parts) <= 3:
        try:
            count = int(parts[1]) if len(parts) > 1 else 1000
            seed = int(parts[2]) if len(parts) > 2 else 0
            return Strategy.sampled(count=count, seed=seed)
        except ValueError:
            pass
    raise UnsupportedInput(f"cannot parse verification strategy {text!r}")


class JordanMap:
    """A map M_n(F) -> M_m(F) with a declared product mode and domain.

    `domain` is "full" or "upper_triangular" (the latter restricts inputs to
    upper-triangular matrices, used by the triangular counterexample).
    Evaluations of non-table bodies are memoized.
    """

    def __init__(self, field, n, mode, body, m=None, domain="full"):
        if mode not in (CIRC, DIAMOND):
            raise ValueError(f"unknown product mode {mode!r}")
        if domain not in ("full", "upper_triangular"):
            raise ValueError(f"unknown domain {domain!r}")
        if n < 1:
            raise ValueError("domain size n must be >= 1")
        self.field = field
        self.n = n
        self.m = n if m is None else m
        self.mode = mode
        self.domain = domain
        self._kind, self._data = body
        self._memo = {}

    # -- constructors ---------------------------------------------------------

    @classmethod
    def from_table(cls, field, n, entries, mode=CIRC, domain="full"):
        """Explicit map given as (x, fx) pairs covering the whole domain."""
        if not field.is_finite:
            raise UnsupportedInput("map tables require a finite field")
        size = _domain_size(field, n, domain)
        if size > _TABLE_CAP:
            raise UnsupportedInput(
                f"domain has {size} matrices; tables are capped at {_TABLE_CAP}"
            )
        items = entries.items() if isinstance(entries, dict) else entries
        table = {}
        m = None
        for x, fx in items:
            if not isinstance(x, Mat) or not isinstance(fx, Mat):
                raise UnsupportedInput("table entries must be matrix pairs")
            if x.field != field or x.nrows != n or x.ncols != n:
                raise UnsupportedInput("table key outside the declared domain")
            if domain == "upper_triangular" and not _is_upper_triangular(x):
                raise UnsupportedInput("table key outside the declared domain")
            if fx.field != field or not fx.is_square:
                raise UnsupportedInput("table value must be a square matrix over the same field")
            if m is None:
                m = fx.nrows
            elif fx.nrows != m:
                raise UnsupportedInput("table values have inconsistent sizes")
            if x in table:
                raise UnsupportedInput("duplicate table key")
            table[x] = fx
        if len(table) != size:
            raise UnsupportedInput(
                f"table covers {len(table)} of {size} domain matrices"
            )
        return cls(field, n, mode, ("table", table), m=m, domain=domain)

    @classmethod
    def conjugation(cls, t, endo=None, transpose=False, mode=CIRC):
        """X |-> T w(X) T^-1, optionally transposing first."""
        if not t.is_square:
            raise UnsupportedInput("conjugating matrix must be square")
        t_inv = t.inverse()
        field, n = t.field, t.nrows
        if endo is not None and endo.field != field:
            raise UnsupportedInput("endomorphism field does not match the matrix field")
        return cls(field, n, mode, ("conjugation", (t, t_inv, endo, bool(transpose))))

    @classmethod
    def constant(cls, field, n, value, mode=CIRC, m=None):
        if value.field != field or not value.is_square:
            raise UnsupportedInput("constant value must be square over the same field")
        return cls(field, n, mode, ("constant", value), m=value.nrows if m is None else m)

    @classmethod
    def zero(cls, field, n, mode=CIRC, m=None):
        m = n if m is None else m
        return cls(field, n, mode, ("constant", mat_zero(field, m)), m=m)

    @classmethod
    def from_oracle(cls, field, n, fn, mode=CIRC, m=None, domain="full"):
        return cls(field, n, mode, ("oracle", fn), m=m, domain=domain)

    # -- evaluation -----------------------------------------------------------

    def __call__(self, x):
        if not isinstance(x, Mat) or x.field != self.field:
            raise UnsupportedInput("input must be a matrix over the map's field")
        if x.nrows != self.n or x.ncols != self.n:
            raise UnsupportedInput(f"input must be {self.n}x{self.n}")
        if self.domain == "upper_triangular" and not _is_upper_triangular(x):
            raise UnsupportedInput("input outside the upper-triangular domain")
        kind = self._kind
        if kind == "table":
            return self._data[x]
        if kind == "constant":
            return self._data
        cached = self._memo.get(x)
        if cached is not None:
            return cached
        if kind == "conjugation":
            t, t_inv, endo, transpose = self._data
            y = x if endo is None else x.apply_endo(endo)
            if transpose:
                y = y.transpose()
            out = t @ y @ t_inv
        else:
            out = self._data(x)
            if not isinstance(out, Mat) or out.field != self.field or out.nrows != self.m:
                raise UnsupportedInput("oracle returned a value outside M_m(F)")
        self._memo[x] = out
        return out

    # -- domain handling ------------------------------------------------------

    @property
    def body_kind(self):
        return self._kind

    @property
    def structured_info(self):
        """Body description for reports, or None for tables/oracles."""
        if self._kind == "constant":
            return {"kind": "constant", "value": self._data}
        if self._kind == "conjugation":
            t, _, endo, transpose = self._data
            return {"kind": "conjugation", "t": t, "endo": endo, "transpose": transpose}
        return None

    @property
    def domain_size(self):
        """Number of domain matrices, or None when the field is infinite."""
        if not self.field.is_finite:
            return None
        return _domain_size(self.field, self.n, self.domain)

    def domain_iter(self):
        """All domain matrices in a fixed row-major order (finite fields)."""
        if not self.field.is_finite:
            raise UnsupportedInput("cannot enumerate matrices over an infinite field")
        f, n, q = self.field, self.n, self.field.order
        positions = _free_positions(n, self.domain)
        zero = f.zero
        for idx in range(q ** len(positions)):
            rows = [[zero] * n for _ in range(n)]
            rem = idx
            for i, j in positions:
                rows[i][j] = rem % q
                rem //= q
            yield Mat._from_raw(f, tuple(tuple(r) for r in rows))

    def sample_domain(self, rng):
        f, n = self.field, self.n
        positions = _free_positions(n, self.domain)
        zero = f.zero
        rows = [[zero] * n for _ in range(n)]
        for i, j in positions:
            rows[i][j] = f.random_raw(rng)
        return Mat._from_raw(f, tuple(tuple(r) for r in rows))

    def product(self, x, y):
        """The Jordan product this map is expected to preserve."""
        return jordan_circ(x, y) if self.mode == CIRC else jordan_diamond(x, y)

    def describe(self):
        out = {"n": self.n, "m": self.m, "mode": self.mode, "body": self._kind}
        if self.domain != "full":
            out["domain"] = self.domain
        return out


def _is_upper_triangular(x):
    zero = x.field.zero
    return all(
        x.rows[i][j] == zero for i in range(x.nrows) for j in range(min(i, x.ncols))
    )


def _free_positions(n, domain):
    if domain == "upper_triangular":
        return [(i, j) for i in range(n) for j in range(i, n)]
    return [(i, j) for i in range(n) for j in range(n)]


def _domain_size(field, n, domain):
    return field.order ** len(_free_positions(n, domain))


def eval_map(phi, x):
    """Evaluate with full input validation (alias for phi(x))."""
    return phi(x)


@dataclass(frozen=True)
class MultReport:
    """Outcome of a product-preservation check."""

    ok: bool
    pairs_checked: int
    qualifier: str
    witness: tuple = None

    def __bool__(self):
        return self.ok


def check_multiplicative(phi, strategy=None, max_domain=81):
    """Does phi(x * y) = phi(x) * phi(y) for the map's product?

    With no strategy: exhaustive over all ordered pairs when the domain has at
    most `max_domain` matrices, else 1000 seeded samples. Exhaustive checking
    refuses domains beyond 10^7 pairs. Returns the first violating pair.
    """
    if strategy is None:
        size = phi.domain_size
        if size is not None and size <= max_domain:
            strategy = Strategy.exhaustive()
        else:
            strategy = Strategy.sampled()
    if strategy.kind == "exhaustive":
        size = phi.domain_size
        if size is None:
            raise UnsupportedInput("exhaustive checking needs a finite field")
        if size * size > _PAIR_CAP:
            raise UnsupportedInput(
                f"exhaustive checking would need {size * size} pairs (cap {_PAIR_CAP})"
            )
        checked = 0
        domain = list(phi.domain_iter())
        for x in domain:
            fx = phi(x)
            for y in domain:
                checked += 1
                if phi(phi.product(x, y)) != phi.product(fx, phi(y)):
                    return MultReport(False, checked, "exhaustive", (x, y))
        return MultReport(True, checked, "exhaustive")
    rng = random.Random(strategy.seed)
    budget = strategy.pair_budget
    for checked in range(1, budget + 1):
        x = phi.sample_domain(rng)
        y = phi.sample_domain(rng)
        if phi(phi.product(x, y)) != phi.product(phi(x), phi(y)):
            return MultReport(False, checked, strategy.describe(), (x, y))
    return MultReport(True, budget, strategy.describe())


def diamond_to_circ(phi):
    """Convert a diamond-preserving map to a circ-preserving one: psi(x) =
    2 phi(x/2). Exact on structured bodies; needs characteristic != 2."""
    if phi.mode != DIAMOND:
        raise ValueError("adapter expects a diamond-mode map")
    f = phi.field
    if f.char2:
        raise UnsupportedInput("the diamond adapter needs characteristic != 2 (halving)")
    if phi._kind == "constant":
        return JordanMap(
            f, phi.n, CIRC, ("constant", phi._data.scale(2)), m=phi.m, domain=phi.domain
        )
    if phi._kind == "conjugation":
        # 2 T w(x/2)^t T^-1 = T w(x)^t T^-1: endomorphisms fix the prime
        # subfield, so the halving and doubling cancel exactly.
        return JordanMap(f, phi.n, CIRC, ("conjugation", phi._data), m=phi.m)
    half = f.scalar(1) / f.scalar(2)
    if phi._kind == "table":
        table = {x: phi(x.scale(half)).scale(2) for x in phi.domain_iter()}
        return JordanMap(f, phi.n, CIRC, ("table", table), m=phi.m, domain=phi.domain)
    fn = phi._data
    return JordanMap(
        f,
        phi.n,
        CIRC,
        ("oracle", lambda x: fn(x.scale(half)).scale(2)),
        m=phi.m,
        domain=phi.domain,
    )
