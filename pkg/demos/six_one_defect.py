"""Signature defect of 6_1 from its labelled diagram, step by step."""

from dihedral import covers, pipeline
from dihedral.cli import emit_report, resolve_input

prob = pipeline.load_problem(resolve_input("six_one.knot"))

block = covers.linking_block(prob.code, "beta_l", "beta_r")
print("lk(beta_l^j, beta_r^k):")
for row in block.entries:
    print("  ", row)

result = pipeline.run_defect(prob)
print()
print(emit_report(result))
