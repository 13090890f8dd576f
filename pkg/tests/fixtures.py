"""Golden data for the S4 reflection representation, transcribed from the worked example."""

from critgroup.intlinalg import IntegerMatrix

# rows chi_0..chi_4 = partitions (4), (3,1), (2,2), (2,1,1), (1,1,1,1)
# columns in the printed order: e, (12), (123), (1234), (12)(34)
GOLDEN_S4_TABLE = [
    [1, 1, 1, 1, 1],
    [3, 1, 0, -1, -1],
    [2, 0, -1, 0, 2],
    [3, -1, 0, 1, -1],
    [1, -1, 1, -1, 1],
]
GOLDEN_S4_CYCLE_TYPES = [(1, 1, 1, 1), (2, 1, 1), (3, 1), (4,), (2, 2)]

GOLDEN_M = IntegerMatrix.from_rows([
    [0, 1, 0, 0, 0],
    [1, 1, 1, 1, 0],
    [0, 1, 0, 1, 0],
    [0, 1, 1, 1, 1],
    [0, 0, 0, 1, 0],
])

GOLDEN_CTILDE = IntegerMatrix.from_rows([
    [3, -1, 0, 0, 0],
    [-1, 2, -1, -1, 0],
    [0, -1, 3, -1, 0],
    [0, -1, -1, 2, -1],
    [0, 0, 0, -1, 3],
])

GOLDEN_C = IntegerMatrix.from_rows([
    [2, -1, -1, 0],
    [-1, 3, -1, 0],
    [-1, -1, 2, -1],
    [0, 0, -1, 3],
])
