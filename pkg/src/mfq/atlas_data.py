"""Externally sourced facts shipped with the catalog (provenance
``atlas-data``): element-order spectra and minimal permutation degrees of
the sporadic groups and of the few groups of Lie type whose spectra are not
recomputed by :mod:`mfq.spectra`.

The orthogonal entries are additionally cross-checked by sampling in
``scripts/build_catalog.py``.
"""

ATLAS_SPECTRA: dict[str, tuple[int, ...]] = {
    "M11": (1, 2, 3, 4, 5, 6, 8, 11),
    "M12": (1, 2, 3, 4, 5, 6, 8, 10, 11),
    "J1": (1, 2, 3, 5, 6, 7, 10, 11, 15, 19),
    "M22": (1, 2, 3, 4, 5, 6, 7, 8, 11),
    "J2": (1, 2, 3, 4, 5, 6, 7, 8, 10, 12, 15),
    "M23": (1, 2, 3, 4, 5, 6, 7, 8, 11, 14, 15, 23),
    "HS": (1, 2, 3, 4, 5, 6, 7, 8, 10, 11, 12, 15, 20),
    "J3": (1, 2, 3, 4, 5, 6, 8, 9, 10, 12, 15, 17, 19),
    "M24": (1, 2, 3, 4, 5, 6, 7, 8, 10, 11, 12, 14, 15, 21, 23),
    "McL": (1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 14, 15, 30),
    "He": (1, 2, 3, 4, 5, 6, 7, 8, 10, 12, 14, 15, 17, 21, 28),
    "3D4(2)": (1, 2, 3, 4, 6, 7, 8, 9, 12, 13, 14, 18, 21, 28),
    "2F4(2)'": (1, 2, 3, 4, 5, 6, 8, 10, 12, 13, 16),
    "O7(3)": (1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 13, 14, 15, 18, 20),
    "O8+(2)": (1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 15),
    "O8-(2)": (1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 15, 17, 21, 30),
}

SPORADIC_MIN_DEGREE = {
    "M11": 11, "M12": 12, "J1": 266, "M22": 22, "J2": 100, "M23": 23,
    "HS": 100, "J3": 6156, "M24": 24, "McL": 275, "He": 2058,
}

# Whether a subgroup isomorphic to PSL(2,7) exists, from the maximal
# subgroup lists (yes for groups with M22, L3(4), U3(3) or L3(2) inside).
SPORADIC_PSL27 = {
    "M11": "no", "M12": "no", "J1": "no", "M22": "yes", "J2": "yes",
    "M23": "yes", "HS": "yes", "J3": "no", "M24": "yes", "McL": "yes",
    "He": "yes",
}

LIE_PSL27 = {
    "3D4(2)": "yes",    # (7 x L2(7)):2 is maximal
    "G2(3)": "yes",     # contains U3(3) and 2^3.L3(2)
    "G2(4)": "yes",     # contains G2(2)' = U3(3)
    "O8+(2)": "yes",    # contains Sp6(2)
    "O8-(2)": "yes",    # contains Omega6+(2) = A8
    "O7(3)": "yes",     # contains S6(2) and G2(3)
}
