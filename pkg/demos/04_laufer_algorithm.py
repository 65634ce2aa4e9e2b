"""The rational-singularity computation sequence, step by step.

Starting from the all-ones cycle, a pairing >= 2 anywhere proves the
plumbed singularity is not rational (so the boundary is not an L-space);
otherwise unit pairings are absorbed until the fundamental cycle appears.
Run: python3 demos/04_laufer_algorithm.py
"""

from qamont import (PlumbingGraph, adjacency_matrix, is_lspace, laufer_run,
                    parse_link)

E8 = PlumbingGraph(-2, ((-2,), (-2, -2), (-2, -2, -2, -2)))
print("E8 plumbing (central -2; legs [-2], [-2,-2], [-2,-2,-2,-2]):")
result = laufer_run(adjacency_matrix(E8))
print(f"  verdict: {result.verdict.value} after {result.steps} steps")
print(f"  fundamental cycle: {list(result.cycle)}  "
      "(the highest-root coefficients, 6 at the branch vertex)")

print()
sigma = PlumbingGraph(-1, ((-2,), (-3,), (-7,)))
print("Brieskorn sphere plumbing (central -1; legs [-2], [-3], [-7]):")
result = laufer_run(adjacency_matrix(sigma))
print(f"  verdict: {result.verdict.value} at step {result.steps}, "
      f"witness vertex {result.witness} (central pairing -1 + 3 = 2)")

print()
print("L-space detection on links (orientation handled internally):")
for text in ("M(1; 2, 2, 2)", "M(2; 2, 2, 2, 2, 2)", "M(0; 3/2)"):
    link = parse_link(text)
    print(f"  {text:<24} L-space: {is_lspace(link)}")
