"""SU(3) Casson invariants of 1/k surgeries, summed from rho invariants.

Prints lambda', lambda'' and lambda for each tabulated q and |k| <= 4, and
checks each against the stored rational functions.  Ends with the
finite-type witness for the trefoil.

Run:  python3 demos/casson_tables.py
"""

from __future__ import annotations

from torus_surgery import closed_form as cf

for q in cf.SUPPORTED_Q:
    print(f"(2, {q}) torus knot")
    print(f"  {'k':>3}  {'lambda_prime':>12}  {'lambda_double_prime':>22}  {'lambda':>22}")
    for k in range(-4, 5):
        rec = cf.lambda_su3(q, k)
        assert rec.lambda_double_prime == cf.table_lambda_double_prime(q, k)
        assert rec.total == cf.table_lambda(q, k)
        print(f"  {k:>3}  {rec.lambda_prime:>12}  {str(rec.lambda_double_prime):>22}  {str(rec.total):>22}")
    print()

report = cf.finite_type_witness()
print("finite type test on trefoil surgeries: x*L + y*L^2 = lambda_SU(3)")
for k, L, L2, value in report.rows:
    print(f"  k = {k:>2}: {L:>2} x + {L2} y = {value}")
print(f"  rank {report.rank}, augmented rank {report.augmented_rank}: "
      f"{'no solution' if report.inconsistent else 'solvable'}")
print(f"  ({report.notes})")
