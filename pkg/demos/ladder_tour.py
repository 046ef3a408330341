"""The rank-climbing triples behind every identity certificate.

Certificates climb D_1 = E_11 -> D_2 -> ... -> D_n = I, where D_r has ones in
the first r diagonal slots. Each climb D_{r-1} -> D_r consumes one triple
(A_r, B_r, C_r) of fixed coefficient matrices satisfying

    (A_r o B_r) o C_r = D_r,

built from the doubling sequence p_1 = 1, p_j = 2 * 3^(j-2) — chosen because
each term equals twice the sum of all earlier ones, an identity that survives
reduction mod any odd prime (mod 3 most terms simply vanish).
"""

from jordanmaps import jordan_circ, ladder, p_sequence, preset_field, rational_field

Q = rational_field()

print("doubling sequence:", [p_sequence(j) for j in range(1, 8)])
print("check p_j = 2 * sum(p_1..p_{j-1}):",
      all(p_sequence(j) == 2 * sum(p_sequence(i) for i in range(1, j)) for j in range(2, 20)))

n = 5
print(f"\ntriples at n = {n} over Q:")
for r in range(2, n + 1):
    lad = ladder(Q, n, r)
    print(f"  rank {r}:")
    print(f"    A = {lad.a}")
    print(f"    B = {lad.b}")
    print(f"    C = {lad.c}")
    assert jordan_circ(jordan_circ(lad.a, lad.b), lad.c) == lad.d
    print(f"    (A o B) o C = {lad.d}  [ok]")

# Over F_3 the tail of the doubling sequence collapses to zero, and the
# climb identity keeps holding with the collapsed coefficients.
f3 = preset_field("F3")
lad = ladder(f3, 6, 6)
print("\nF_3 collapse: p-values along the rank-6 climb:",
      [str(p) for p in lad.p_values])
assert jordan_circ(jordan_circ(lad.a, lad.b), lad.c) == lad.d
print("rank-6 climb identity still exact over F_3")
