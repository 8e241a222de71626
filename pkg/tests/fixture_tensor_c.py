"""Reference tensor on the combinatorics C, mod 5, keyed by incidence edge.

Edge keys are (support, line); vectors list the character values on the ten
line meridians in index order.  Used as the ground-truth generator for the
tensor linking group tests.
"""

TENSOR_C = {
    ((1, 2, 6), 1): (0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    ((1, 3, 9), 1): (0, 1, 0, 0, 0, 4, 0, 4, 0, 1),
    ((1, 4, 5), 1): (0, 4, 2, 0, 0, 1, 0, 1, 3, 4),
    ((1, 7), 1): (0, 2, 3, 3, 2, 3, 0, 0, 2, 0),
    ((1, 8, 10), 1): (0, 3, 0, 2, 3, 2, 0, 0, 0, 0),

    ((1, 2, 6), 2): (0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    ((2, 3, 7), 2): (1, 0, 0, 2, 3, 4, 0, 0, 2, 3),
    ((2, 4, 10), 2): (0, 0, 3, 0, 2, 0, 2, 0, 3, 0),
    ((2, 5, 9), 2): (1, 0, 0, 0, 0, 4, 0, 0, 0, 0),
    ((2, 8), 2): (3, 0, 2, 3, 0, 2, 3, 0, 0, 2),

    ((1, 3, 9), 3): (0, 4, 0, 4, 0, 1, 1, 1, 0, 4),
    ((2, 3, 7), 3): (4, 0, 0, 0, 0, 3, 0, 0, 1, 2),
    ((3, 4, 8), 3): (4, 4, 0, 0, 0, 1, 1, 0, 1, 4),
    ((3, 5), 3): (2, 2, 0, 3, 0, 0, 3, 2, 3, 0),
    ((3, 6, 10), 3): (0, 0, 0, 3, 0, 0, 0, 2, 0, 0),

    ((1, 4, 5), 4): (0, 4, 3, 0, 0, 0, 1, 2, 4, 1),
    ((2, 4, 10), 4): (2, 0, 2, 0, 3, 0, 3, 3, 2, 0),
    ((3, 4, 8), 4): (3, 1, 0, 0, 2, 0, 1, 0, 4, 4),
    ((4, 6), 4): (0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    ((4, 7, 9), 4): (0, 0, 0, 0, 0, 0, 0, 0, 0, 0),

    ((1, 4, 5), 5): (0, 2, 0, 0, 0, 4, 4, 2, 3, 0),
    ((2, 5, 9), 5): (4, 0, 0, 1, 0, 1, 4, 0, 0, 0),
    ((3, 5), 5): (3, 3, 0, 2, 0, 0, 2, 3, 2, 0),
    ((5, 6, 7, 8), 5): (3, 0, 0, 2, 0, 0, 0, 0, 0, 0),
    ((5, 10), 5): (0, 0, 0, 0, 0, 0, 0, 0, 0, 0),

    ((1, 2, 6), 6): (0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    ((3, 6, 10), 6): (3, 2, 0, 0, 0, 0, 0, 0, 0, 0),
    ((4, 6), 6): (0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    ((5, 6, 7, 8), 6): (2, 3, 0, 0, 0, 0, 0, 0, 0, 0),
    ((6, 9), 6): (0, 0, 0, 0, 0, 0, 0, 0, 0, 0),

    ((1, 7), 7): (0, 3, 2, 2, 3, 2, 0, 0, 3, 0),
    ((2, 3, 7), 7): (0, 0, 0, 3, 2, 3, 0, 0, 2, 0),
    ((4, 7, 9), 7): (0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    ((5, 6, 7, 8), 7): (0, 2, 3, 0, 0, 0, 0, 0, 0, 0),
    ((7, 10), 7): (0, 0, 0, 0, 0, 0, 0, 0, 0, 0),

    ((1, 8, 10), 8): (0, 0, 0, 0, 2, 3, 0, 0, 0, 0),
    ((2, 8), 8): (2, 0, 3, 2, 0, 3, 2, 0, 0, 3),
    ((3, 4, 8), 8): (3, 0, 0, 0, 3, 4, 3, 0, 0, 2),
    ((5, 6, 7, 8), 8): (0, 0, 2, 3, 0, 0, 0, 0, 0, 0),
    ((8, 9), 8): (0, 0, 0, 0, 0, 0, 0, 0, 0, 0),

    ((1, 3, 9), 9): (0, 0, 0, 1, 0, 0, 4, 0, 0, 0),
    ((2, 5, 9), 9): (0, 0, 0, 4, 0, 0, 1, 0, 0, 0),
    ((4, 7, 9), 9): (0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    ((6, 9), 9): (0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    ((8, 9), 9): (0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    ((9, 10), 9): (0, 0, 0, 0, 0, 0, 0, 0, 0, 0),

    ((1, 8, 10), 10): (0, 2, 0, 3, 0, 0, 0, 0, 0, 0),
    ((2, 4, 10), 10): (3, 0, 0, 0, 0, 0, 0, 2, 0, 0),
    ((3, 6, 10), 10): (2, 3, 0, 2, 0, 0, 0, 3, 0, 0),
    ((5, 10), 10): (0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    ((7, 10), 10): (0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    ((9, 10), 10): (0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
}
