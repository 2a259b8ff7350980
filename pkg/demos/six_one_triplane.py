"""Check the singular tri-plane diagram with a 6_1 cone point and lift its trisection."""

from dihedral import trisect
from dihedral.cli import resolve_input

d = trisect.load_triplane(resolve_input("six_one.tri"))
rep = trisect.validate_triplane(d)
for c in rep.closures:
    extra = f", {c.knot} {c.alexander}" if c.knot else ""
    print(f"{c.name} = {c.tangles}: {c.components} component(s), det {c.determinant}, {c.status}{extra}")
print(f"chi(B) = {rep.chi_B} ({rep.surface}), cover trisection {rep.params}, "
      f"chi(Y) = {trisect.euler_char_cover(trisect.EulerData(3, rep.chi_B, rep.m))}")
