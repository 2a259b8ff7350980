"""Lift the B_n shadow words and identify the genus-one diagrams."""

from dihedral import shadows

T = shadows.TorusComplex()
ends = ("e", "b")
b0 = shadows.closed_shadow_class(shadows.b_family_word(0), *ends, complex_=T)
b3 = shadows.closed_shadow_class(shadows.b_family_word(3), *ends, complex_=T)
A, C = b0 + b3, b3            # stand-ins for the A and C shadows

for n in (0, 3, 6, 9, 12, 15):
    w = shadows.b_family_word(n)
    cls = shadows.closed_shadow_class(w, *ends, complex_=T)
    print(f"B_{n}: {len(w)} letters, class ({cls.a}, {cls.b}), "
          f"{shadows.identify_genus_one(A, cls, C)}")
    if n <= 6:
        for sheet in (2, 3):
            print("   ", shadows.lift_shadow_word(w, sheet))
