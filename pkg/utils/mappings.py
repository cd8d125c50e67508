EVEN_DIGITS = (0, 2, 4, 6, 8)
ODD_DIGITS = (1, 3, 5, 7, 9)

# last-two-digit classes of base-10 perfect squares:
# "e" is any even tens digit, "o" any odd tens digit
SQUARE_DIGIT_CLASSES = {
    "00": (0,),
    "e1": tuple(10 * e + 1 for e in EVEN_DIGITS),
    "e4": tuple(10 * e + 4 for e in EVEN_DIGITS),
    "25": (25,),
    "o6": tuple(10 * o + 6 for o in ODD_DIGITS),
    "e9": tuple(10 * e + 9 for e in EVEN_DIGITS),
}

SQUARE_RESIDUES_MOD_100 = frozenset(
    residue
    for residues in SQUARE_DIGIT_CLASSES.values()
    for residue in residues
)


def digit_class(residue: int) -> str:
    """
    Name of the square digit class a residue mod 100 belongs to.
    Returns an empty string for residues no square can end in.
    """
    for name, residues in SQUARE_DIGIT_CLASSES.items():
        if residue in residues:
            return name
    return ""
