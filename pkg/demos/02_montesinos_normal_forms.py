"""Montesinos parameters: slide moves, standard form, reflection, determinant.

Slide moves trade full twists between a tangle and the half-twist count e
without changing the link; eps = e - sum(beta_i/alpha_i) is the invariant
that survives, and |alpha_1...alpha_p * eps| is the link determinant.
Run: python3 demos/02_montesinos_normal_forms.py
"""

from qamont import (canonical_form, determinant, epsilon, format_link,
                    parse_link, reflect, slide, to_negative_form,
                    to_standard_form)

link = parse_link("M(0; -7/3, 5/7)")
std = to_standard_form(link)
print(f"raw parameters:   {format_link(link)}")
print(f"standard form:    {format_link(std)}")
print(f"eps is preserved: {epsilon(link)} == {epsilon(std)}")
print(f"determinant:      {determinant(link)}")

print()
print("A chain of random-looking slide moves leaves every invariant alone:")
slid = slide(slide(slide(link, 0, 2), 1, -1), 0, -3)
print(f"  after slides:   {format_link(slid)}")
print(f"  eps:            {epsilon(slid)}")
print(f"  determinant:    {determinant(slid)}")
print(f"  canonical form: {format_link(canonical_form(slid))} "
      f"== {format_link(canonical_form(link))}")

print()
print("Reflection negates eps and is an involution:")
mirrored = reflect(std)
print(f"  reflect:        {format_link(mirrored)}  (eps = {epsilon(mirrored)})")
print(f"  reflect twice:  {format_link(reflect(mirrored))}")

print()
print("The negative form (all tangles < -1) feeds the plumbing construction:")
print(f"  negative form:  {format_link(to_negative_form(std))}")
