"""Replay a compiled board and confirm the winner matches the formula.

The verifier walks the compiled position through the rules engine,
checking at every ply that play is as forced as the construction claims,
enumerating every adversary decision, and searching the hero's.
Run: python3 demos/04_verify_the_reduction.py
"""

from atroposk.qbf import Formula, Quantifier, eval_formula
from atroposk.reduction import compile_formula
from atroposk.verifier import adversarial_probe, gadget_conformance, verify_reduction

E, A = Quantifier.EXISTS, Quantifier.FORALL

print("per-gadget conformance at k=2:")
for kind in ("switch", "merge", "check", "crossover"):
    report = gadget_conformance(kind, 2)
    print(f"  {kind}: {'ok' if report.ok else 'FAIL'}")
    for line in report.checks:
        print(f"      {line}")

cases = [
    Formula(((E, 1),), ((1,),)),
    Formula(((A, 1),), ((1,),)),
    Formula(((E, 1), (A, 2)), ((1, 2), (1, -2))),
    Formula(((A, 1), (E, 2), (A, 3)), ((1, -3), (-1, 2, 3))),
]
print("\nfull reductions at k=2:")
for formula in cases:
    report = verify_reduction(formula, 2)
    verdict = "ok" if report.ok else "FAIL " + "; ".join(report.failures)
    print(f"  eval={str(report.eval).lower():5} hero_wins={str(report.hero_wins).lower():5} "
          f"lines={report.lines_explored:3} -> {verdict}")

print("\nadversarial probes (off-script colors on wires):")
output = compile_formula(Formula(((E, 1),), ((1,),)), 2)
for seed in range(3):
    probe = adversarial_probe(output, plies=4, seed=seed)
    print(f"  seed {seed}: deviations={probe.deviations} "
          f"responses_checked={probe.responses_checked} "
          f"{'ok' if probe.ok else 'FAIL'}")
