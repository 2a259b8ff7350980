"""
The five-curve example from transcribed linking blocks: both ways of
reading the off-diagonal blocks, and the one block whose row sums are
inconsistent.
"""

from dihedral import defect, pipeline
from dihedral.cli import resolve_input

prob = pipeline.load_problem(resolve_input("alpha_11.knot"))

for (u, v), diff in defect.transpose_pairing(prob.blocks).items():
    if diff is not None:
        print(f"({u}, {v}) vs ({v}, {u})^T differ by {diff[0]}")

for resolution in ("left", "right"):
    r = pipeline.run_defect(prob, resolution=resolution)
    print(f"\n{resolution}: signature {r.sigma_w}, Xi = {r.report.xi}")
    for row in r.kernel_matrix:
        print("  ", row)

print("\nrow/column sums that are not constant:")
for key, (rows, cols) in defect.transfer_defects(prob.blocks).items():
    print(f"  {key}: rows {rows}, columns {cols}")
