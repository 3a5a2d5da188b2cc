"""Published reference data for the (twisted) Steinberg normalization checks.

For each co-rank one pair (delta, delta - {removed}) with published data we
keep the inducing exponent nu_R in ambient coordinates together with its
simple-basis form, the published fundamental-coweight directions for the
non simply-laced types, and the lists of Ways under which the positivity
check is claimed to succeed.  All of it is cross-validated against
independently computed values before use.
"""

from __future__ import annotations

from fractions import Fraction as Q

from .vectors import Vector, scale, vec

H = Q(1, 2)


def _q(prefactor, ints) -> Vector:
    return scale(prefactor, vec(ints))


# nu_R per (type, removed): ambient vector and coordinates over the simple
# roots of the type (ordered by ascending label).
NU_R: dict[tuple[str, int], tuple[Vector, Vector]] = {
    ("G2", 1): (_q(H, [1, -2, 1]), _q(H, [0, 1])),
    ("G2", 2): (_q(H, [0, 1, -1]), _q(H, [1, 0])),

    ("F4", 1): (_q(H, [3, -3, 3, 1]), vec([0, 3, 5, 3])),
    ("F4", 2): (_q(H, [1, 0, -2, 1]), _q(H, [1, 0, 2, 2])),
    ("F4", 3): (_q(Q(1, 4), [1, 3, -1, -5]), _q(H, [2, 2, 0, 1])),
    ("F4", 4): (_q(H, [0, 5, 3, 1]), _q(H, [5, 8, 9, 0])),

    ("E6", 8): (_q(Q(1, 4), [-5, -5, 5, 1, -3, -7, 11, -5]), _q(H, [5, 8, 9, 8, 5, 0])),
    ("E6", 7): (vec([0, 0, 4, 3, 2, 1, 0, 0]), vec([4, 7, 9, 5, 0, 5])),
    ("E6", 6): (_q(Q(1, 4), [-1, -1, 7, 3, -1, -5, -9, -1]), _q(H, [4, 6, 6, 0, 1, 4])),
    ("E6", 5): (_q(H, [-1, -1, 1, -1, -3, 2, 0, -1]), _q(H, [2, 2, 0, 2, 2, 1])),

    ("E7", 8): (_q(H, [-3, 3, 1, -1, -3, -5, 7, -3]), vec([3, 5, 6, 6, 5, 3, 0])),
    ("E7", 7): (vec([0, 5, 4, 3, 2, 1, 0, 0]), _q(H, [10, 18, 24, 28, 15, 0, 15])),
    ("E7", 6): (_q(Q(1, 4), [-1, 9, 5, 1, -3, -7, -11, -1]), _q(H, [5, 8, 9, 8, 0, 1, 5])),
    ("E7", 5): (_q(H, [-1, 2, 0, -2, -4, 2, 0, -1]), _q(H, [3, 4, 3, 0, 2, 2, 1])),
    ("E7", 4): (vec([-1, 0, -1, -2, 2, 1, 0, -1]), vec([1, 1, 0, 3, 3, 2, 2])),
    ("E7", 3): (_q(H, [-4, -3, -5, 6, 4, 2, 0, -4]), _q(H, [1, 0, 10, 18, 14, 8, 10])),
    ("E7", 2): (vec([-4, -4, 4, 3, 2, 1, 0, -4]), vec([0, 8, 15, 21, 15, 8, 11])),

    ("E8", 8): (_q(Q(1, 4), [7, 3, -1, -5, -9, -13, 17, -7]), _q(H, [7, 12, 15, 16, 15, 12, 7, 0])),
    ("E8", 7): (vec([6, 5, 4, 3, 2, 1, 0, 0]), _q(H, [12, 22, 30, 36, 40, 21, 0, 21])),
    ("E8", 6): (_q(Q(1, 4), [11, 7, 3, -1, -5, -9, -13, -1]), _q(H, [6, 10, 12, 12, 10, 0, 1, 6])),
    ("E8", 5): (_q(H, [3, 1, -1, -3, -5, 2, 0, -1]), _q(H, [4, 6, 6, 4, 0, 2, 2, 1])),
    ("E8", 4): (_q(H, [1, -1, -3, -5, 4, 2, 0, -2]), _q(H, [3, 4, 3, 0, 6, 6, 4, 4])),
    ("E8", 3): (vec([-1, -2, -3, 3, 2, 1, 0, -2]), vec([1, 1, 0, 5, 9, 7, 4, 5])),
    ("E8", 2): (_q(H, [-7, -9, 8, 6, 4, 2, 0, -8]), _q(H, [1, 0, 16, 30, 42, 30, 16, 22])),
    ("E8", 1): (_q(H, [-17, 10, 8, 6, 4, 2, 0, -17]), _q(H, [0, 27, 52, 75, 96, 66, 34, 49])),
}

# Published ambient coweight directions for the non simply-laced types; the
# simply-laced ones are pinned by <alpha_tilde_i, beta_check> = c_i instead.
ALPHA_TILDE: dict[tuple[str, int], Vector] = {
    ("G2", 1): vec([1, 0, -1]),            # 2*alpha + beta
    ("G2", 2): vec([2, -1, -1]),           # 3*alpha + 2*beta
    ("F4", 1): vec([1, 1, 0, 0]),
    ("F4", 2): vec([2, 1, 1, 0]),
    ("F4", 3): _q(H, [3, 1, 1, 1]),
    ("F4", 4): vec([1, 0, 0, 0]),
}

# Claimed Way lists per pair.  mode "all": the gcd over the listed ways must
# be free of positive terms; mode "each": every listed way works on its own.
# twist "branch": the untwisted case needs an argument beyond this calculus,
# while any nontrivial twist is claimed to work with the listed ways.
# twist "obstruction": the untwisted case is genuinely obstructed.
CLAIMS: dict[str, dict[int, dict]] = {
    "G2": {
        1: {"ways": (1,), "mode": "all", "twist": "branch"},
        2: {"ways": (1,), "mode": "all"},
    },
    "F4": {
        1: {"ways": (1, 3), "mode": "all"},
        2: {"ways": (1,), "mode": "all"},
        3: {"ways": (3,), "mode": "all"},
        4: {"ways": (1,), "mode": "all"},
    },
    "E6": {
        8: {"ways": (1, 5), "mode": "each"},
        7: {"ways": (1, 5), "mode": "all"},
        6: {"ways": (4,), "mode": "all"},
        5: {"ways": (1,), "mode": "all"},
    },
    "E7": {
        8: {"ways": (1, 4), "mode": "all"},
        7: {"ways": (1,), "mode": "all"},
        6: {"ways": (5,), "mode": "all"},
        5: {"ways": (1,), "mode": "all"},
        4: {"ways": (1,), "mode": "all"},
        3: {"ways": (1,), "mode": "all"},
        2: {"ways": (1, 5), "mode": "all"},
    },
    "E8": {
        1: {"ways": (1, 6), "mode": "all"},
        7: {"ways": (1, 6), "mode": "all"},
        6: {"ways": (6,), "mode": "all"},
        5: {"ways": (7,), "mode": "all"},
        4: {"ways": (1, 7), "mode": "all"},
        3: {"ways": (1,), "mode": "all"},
        2: {"ways": (1,), "mode": "all"},
        8: {"ways": (1, 2), "mode": "all", "twist": "obstruction"},
    },
}

# Row lists of the published action tables: E6 and E7 include the adjacent
# node of the enclosing E8 diagram as an extra first row.
ACTION_TABLE_ROWS = {
    "E6": (2, 3, 4, 5, 6, 7, 8),
    "E7": (1, 2, 3, 4, 5, 6, 7, 8),
    "E8": (1, 2, 3, 4, 5, 6, 7, 8),
}
ACTION_TABLE_COLUMNS = {
    "E6": (8, 7, 6, 5, 4, 3),
    "E7": (8, 7, 6, 5, 4, 3, 2),
    "E8": (8, 7, 6, 5, 4, 3, 2, 1),
}
