"""Constructions showing the classification's hypotheses are sharp.

* On the upper-triangular subalgebra, X |-> diag(w(x_11), ..., w(x_nn)) with a
  multiplicative-but-not-additive w (squaring, by default) preserves the circ
  product without being linear — full matrix algebras are essential.
* Over F_2 the diamond product degenerates (trace(X <> Y) = 0 always), so a
  map supported on a single trace-one matrix preserves it while fitting none
  of the three shapes — odd characteristic is essential.
* X |-> blockdiag(X, P) into M_2n sends 0 to a nonzero idempotent without
  being constant — equal matrix sizes are essential for that dichotomy.

Each bundle carries the map, replayable preservation evidence, and witness
pairs for the failures (non-additivity, non-constancy); `verify` re-checks
everything from scratch.
"""

import random
from dataclasses import dataclass, field as dc_field

from .errors import UnsupportedInput
from .exact_fields import prime_field
from .maps import CIRC, DIAMOND, JordanMap, MultReport, Strategy, check_multiplicative
from .matrices import (
    Mat,
    block_diag,
    is_idempotent,
    mat_identity,
    mat_unit,
    mat_zero,
)


@dataclass(frozen=True)
class CounterexampleBundle:
    name: str
    description: str
    map: JordanMap
    strategy: Strategy
    evidence: MultReport
    non_additivity: tuple = None
    non_constancy: tuple = None
    extra: dict = dc_field(default_factory=dict)

    def verify(self):
        """Re-check the preservation evidence and every witness pair."""
        if not check_multiplicative(self.map, self.strategy):
            return False
        if self.non_additivity is not None:
            x, y = self.non_additivity
            if self.map(x + y) == self.map(x) + self.map(y):
                return False
        if self.non_constancy is not None:
            x, y = self.non_constancy
            if self.map(x) == self.map(y):
                return False
        return True


def _evidence_strategy(phi, seed=0):
    size = phi.domain_size
    if size is not None and size * size <= 100_000:
        return Strategy.exhaustive()
    return Strategy.sampled(count=1000, seed=seed)


def triangular_example(field, n=2, omega=None):
    """Diagonal-squeezing map on upper-triangular matrices.

    phi(X) = diag(w(x_11), ..., w(x_nn)) preserves X o Y because the diagonal
    of a product of triangular matrices is the product of the diagonals; with
    w multiplicative but non-additive (default: w(x) = x^2) the map is not
    additive, hence not of conjugation shape.
    """
    if field.char2:
        raise UnsupportedInput("squaring is additive in characteristic 2; no example there")
    if omega is None:
        omega = lambda s: s * s
    one = field.scalar(1)
    # w must respect products and break some sum; find the witnesses first.
    pairs = []
    if field.is_finite and field.order <= 97:
        elems = [field.scalar(v) for v in field.elements()]
        pairs = [(a, b) for a in elems for b in elems]
    else:
        rng = random.Random(7)
        pairs = [
            (field.scalar(field.random_raw(rng)), field.scalar(field.random_raw(rng)))
            for _ in range(200)
        ]
        pairs += [(one, one), (one + one, one)]
    for a, b in pairs:
        if omega(a * b) != omega(a) * omega(b):
            raise ValueError(f"omega is not multiplicative at ({a}, {b})")
    scalar_witness = next(
        ((a, b) for a, b in pairs if omega(a + b) != omega(a) + omega(b)), None
    )
    if scalar_witness is None:
        raise ValueError("omega is additive on every probed pair; no counterexample")

    def fn(x):
        rows = [
            [omega(x.entry(i, i)) if i == j else field.scalar(0) for j in range(1, n + 1)]
            for i in range(1, n + 1)
        ]
        return Mat(field, rows)

    phi = JordanMap.from_oracle(field, n, fn, mode=CIRC, domain="upper_triangular")
    strategy = _evidence_strategy(phi)
    evidence = check_multiplicative(phi, strategy)
    a, b = scalar_witness
    x = mat_identity(field, n).scale(a)
    y = mat_identity(field, n).scale(b)
    return CounterexampleBundle(
        name="triangular",
        description=(
            "on upper-triangular matrices, squeezing the diagonal through a "
            "multiplicative non-additive scalar map preserves the circ product "
            "without being linear"
        ),
        map=phi,
        strategy=strategy,
        evidence=evidence,
        non_additivity=(x, y),
        non_constancy=(mat_zero(field, n), mat_identity(field, n)),
        extra={"domain": "upper_triangular", "scalar_witness": scalar_witness},
    )


def char2_example(n=2, a=None, b=None):
    """Diamond-preserving map over F_2 fitting none of the three shapes.

    phi sends one chosen matrix A (with trace 1) to B and everything else to
    0. Since trace(X <> Y) = 2 trace(XY) = 0 over F_2, no diamond product ever
    equals A, so phi(X <> Y) = 0 = phi(X) <> phi(Y) (B <> B = 2B^2 = 0 too).
    """
    f2 = prime_field(2)
    if a is None:
        a = mat_unit(f2, n, 1, 1)
    if b is None:
        b = mat_unit(f2, n, 1, 2) if n >= 2 else mat_identity(f2, 1)
    if a.field != f2 or b.field != f2 or a.nrows != n or b.nrows != n:
        raise ValueError("A and B must be n x n matrices over F_2")
    if a.trace() != f2.scalar(1):
        raise ValueError("A must have trace 1 (otherwise some X <> Y hits it)")
    if b.is_zero:
        raise ValueError("B must be nonzero for the map to be nonzero")
    zero = mat_zero(f2, n)
    table = {}
    probe = JordanMap.from_oracle(f2, n, lambda x: x, mode=DIAMOND)
    for x in probe.domain_iter():
        table[x] = b if x == a else zero
    phi = JordanMap.from_table(f2, n, table, mode=DIAMOND)
    strategy = Strategy.exhaustive()
    evidence = check_multiplicative(phi, strategy)
    y = next(
        x for x in phi.domain_iter() if not x.is_zero and x != a and x + a != a
    )
    return CounterexampleBundle(
        name="char2",
        description=(
            "over F_2 the diamond product has trace zero, so a map supported "
            "on a single trace-one matrix preserves it while being neither "
            "zero, constant-idempotent, nor a twisted conjugation"
        ),
        map=phi,
        strategy=strategy,
        evidence=evidence,
        non_additivity=(a, y),
        non_constancy=(a, zero),
        extra={"support": a, "value": b, "trace_condition": "trace(A) = 1"},
    )


def block_embedding_example(field, n=2, p=None):
    """Corner embedding M_n -> M_2n, X |-> blockdiag(X, P) with P idempotent.

    Preserves the circ product, yet sends 0 to the nonzero idempotent
    blockdiag(0, P) without being constant: maps into larger algebras escape
    the constant/zero dichotomy that holds for equal sizes.
    """
    if field.char2:
        raise UnsupportedInput("the circ product needs characteristic != 2")
    if p is None:
        p = mat_unit(field, n, 1, 1)
    if p.field != field or p.nrows != n or not p.is_square:
        raise ValueError("P must be an n x n matrix over the same field")
    if not is_idempotent(p):
        raise ValueError("P must be idempotent")
    if p.is_zero:
        raise ValueError("P must be nonzero (otherwise phi(0) = 0)")

    def fn(x):
        return block_diag(x, p)

    phi = JordanMap.from_oracle(field, n, fn, mode=CIRC, m=2 * n)
    strategy = _evidence_strategy(phi)
    evidence = check_multiplicative(phi, strategy)
    ident = mat_identity(field, n)
    return CounterexampleBundle(
        name="block_embedding",
        description=(
            "embedding X as a diagonal block next to a fixed idempotent "
            "preserves the circ product but sends 0 to a nonzero value "
            "without being constant"
        ),
        map=phi,
        strategy=strategy,
        evidence=evidence,
        non_additivity=(ident, ident),
        non_constancy=(mat_zero(field, n), ident),
        extra={"corner": p, "codomain_size": 2 * n},
    )


def all_examples(field=None):
    """The three bundles over a default odd-characteristic field."""
    if field is None:
        field = prime_field(5)
    return [
        triangular_example(field),
        char2_example(),
        block_embedding_example(field),
    ]
