"""Exhaustive optimum on small instances and how far it sits above the guarantee.

Run: python3 demos/oracle_and_gap.py
"""

from judicious import GenSpec, brute_force_best, conjecture_gap_report, generate, partition_judicious
from judicious.oracle import RulastInstance, check_rulast

for r in (2, 3, 4):
    H = generate(GenSpec(r=r, n=9, m=24, seed=r))
    P, best = brute_force_best(H, r)
    cert = partition_judicious(H, r)
    report = conjecture_gap_report(H, r)
    d = report.to_dict()
    print(f"r={r}: optimum {best}, solver {cert.min_coverage}, bound {cert.bound}, "
          f"ratio {d['ratio']} vs guaranteed {d['guaranteed_constant']} / conjectured {d['conjectured_constant']}")

# Counting lemma on normalized coverages: enough classes at >= 2c to pay for the weak ones.
inst = RulastInstance([1, 1, 1, 1, "1/6"], "5/12")
print("counts (j, k, l, rest):", inst.counts(), "mean", inst.mean, "holds:", check_rulast(inst))
