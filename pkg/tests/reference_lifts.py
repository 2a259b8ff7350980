# Lifted shadow words for the B_{6i} and B_{6i+3} tangles, as published.
B6I_SHEET2 = r"y_2^2\left((x_1^1y_1^1y_2^3x_2^3y_1^1y_2^1)(x_1^2y_1^2y_2^1x_2^1y_1^3y_2^3)(x_1^3y_1^3y_2^2x_2^2y_1^2y_2^2)\right)^i"
B6I_SHEET3 = r"y_2^3\left((x_1^3y_1^3y_2^2x_2^2y_1^2y_2^2)(x_1^1y_1^1y_2^3x_2^3y_1^1y_2^1)(x_1^2y_1^2y_2^1x_2^1y_1^3y_2^3)\right)^i"
B6I3_SHEET2 = r"y_2^2\left((x_1^1y_1^1y_2^3x_2^3y_1^1y_2^1)(x_1^2y_1^2y_2^1x_2^1y_1^3y_2^3)(x_1^3y_1^3y_2^2x_2^2y_1^2y_2^2)\right)^i(x_1^1y_1^1y_2^3x_2^3y_1^1y_2^1x_1^2y_1^2y_2^1)"
B6I3_SHEET3 = r"y_2^3\left((x_1^3y_1^3y_2^2x_2^2y_1^2y_2^2)(x_1^1y_1^1y_2^3x_2^3y_1^1y_2^1)(x_1^2y_1^2y_2^1x_2^1y_1^3y_2^3)\right)^i(x_1^3y_1^3y_2^2x_2^2y_1^2y_2^2x_1^1y_1^1y_2^3)"

REFERENCE_LIFTS = {
    "6i": (B6I_SHEET2, B6I_SHEET3),
    "6i+3": (B6I3_SHEET2, B6I3_SHEET3),
}


def expand(word, i):
    """The reference word with the exponent i carried out, as a flat string."""
    from dihedral.shadows import parse_shadow_word
    return parse_shadow_word(word, i=i).latex()
