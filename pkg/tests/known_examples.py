"""Published example data used as regression fixtures (graphs, ideals, matrices)."""

from pathlib import Path

DATA = Path(__file__).parent / "data"

# ten squarefree degree-7 monomials in ten variables: normal, yet the
# degree-2 Hilbert-basis criterion's set B is not a Hilbert basis
DEGREE7_MONOMIALS = [
    "t1*t2*t3*t4*t5*t6*t7",
    "t1*t2*t3*t4*t5*t7*t8",
    "t1*t2*t3*t4*t5*t8*t9",
    "t1*t2*t3*t4*t5*t8*t10",
    "t1*t2*t3*t4*t7*t8*t10",
    "t2*t3*t5*t7*t8*t9*t10",
    "t1*t2*t6*t7*t8*t9*t10",
    "t2*t3*t6*t7*t8*t9*t10",
    "t3*t4*t6*t7*t8*t9*t10",
    "t3*t5*t6*t7*t8*t9*t10",
]

# edge ideal of the 7-vertex odd antihole as printed
ANTIHOLE_EDGES = [
    (1, 3), (1, 4), (2, 4), (1, 5), (2, 5), (3, 5), (1, 6),
    (2, 6), (3, 6), (4, 6), (2, 7), (3, 7), (4, 7), (5, 7),
]

# incidence matrix of its ideal of covers (rows = variables)
ANTIHOLE_COVER_MATRIX = [
    [1, 0, 1, 1, 1, 1, 0],
    [1, 1, 1, 1, 1, 0, 0],
    [1, 1, 1, 1, 0, 0, 1],
    [1, 1, 1, 0, 0, 1, 1],
    [1, 1, 0, 0, 1, 1, 1],
    [0, 1, 0, 1, 1, 1, 1],
    [0, 0, 1, 1, 1, 1, 1],
]

# the Kaiser graph H4
KAISER_EDGES = [
    (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (8, 9), (9, 10), (1, 10),
    (2, 11), (8, 11), (3, 12), (7, 12), (1, 9), (2, 8), (3, 7), (4, 6), (1, 6), (4, 9),
    (5, 10), (10, 11), (11, 12), (5, 12),
]

# complement of the 13-vertex graph whose edge ideal is normal but whose
# ideal of covers is not (figure node names translated to vertex labels)
THIRTEEN_COMPLEMENT_EDGES = [
    (1, 3), (1, 4), (1, 5), (1, 6), (2, 4), (2, 5), (2, 6), (3, 5), (3, 6), (4, 6),
    (7, 5), (7, 4), (7, 3), (7, 2), (10, 12), (10, 13), (10, 7), (10, 8), (11, 13),
    (11, 7), (11, 8), (11, 9), (12, 7), (12, 8), (12, 9), (13, 8), (13, 9), (7, 9),
]

# the closure witness: t7 squared, every other variable to the fourth, power 5
THIRTEEN_WITNESS = (4, 4, 4, 4, 4, 4, 2, 4, 4, 4, 4, 4, 4)
THIRTEEN_WITNESS_POWER = 5

# ideal of covers of the cone over the 5-cycle (apex 6)
CONE_C5_COVERS = ["t1*t2*t3*t4*t5", "t2*t4*t5*t6", "t1*t2*t4*t6", "t1*t3*t4*t6", "t1*t3*t5*t6", "t2*t3*t5*t6"]
