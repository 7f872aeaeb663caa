"""Compile a quantified Boolean formula into an Atropos-2 position.

Shows the gadget inventory, the forced opening, structural validation,
and writes the board text plus SVG next to this script.
Run: python3 demos/03_compile_a_formula.py
"""

import collections
import pathlib

from atroposk.qbf import parse_qdimacs
from atroposk.reduction import compile_formula, validate_output
from atroposk.render import board_svg
from atroposk.rules import legal_targets

TEXT = """\
c exists x1 forall x2 : (x1 | x2) & (x1 | -x2)
p cnf 2 2
e 1 0
a 2 0
1 2 0
1 -2 0
"""

formula = parse_qdimacs(TEXT)
output = compile_formula(formula, k=2)

kinds = collections.Counter(g.kind for g in output.scene.gadgets.values())
print(f"board size {output.board.size}, {output.board.uncolored_count()} uncolored cells")
print(f"gadgets: {dict(kinds)}; crossovers: {len(output.crossovers)}")
print(f"wires: {len(output.scene.routes)}")
print(f"decision schedule: "
      f"{ {g: p.value for g, p in sorted(output.decision_schedule.items())} }")

targets = legal_targets(output.state)
print(f"forced opening: {len(targets)} legal target(s): {sorted(targets)!r}")

report = validate_output(output)
print(f"validator: {'pass' if report.ok else 'FAIL'}")
for line in report.checks:
    print(f"  - {line}")

here = pathlib.Path(__file__).parent
(here / "compiled.board").write_text(output.board_text(), encoding="utf-8")
(here / "compiled.svg").write_text(board_svg(output.board, cell=4.0), encoding="utf-8")
print(f"wrote {here / 'compiled.board'} and {here / 'compiled.svg'}")
