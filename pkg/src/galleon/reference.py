"""Published reference counts used for cross-validation.

Transcribed from the enumeration literature for time-consistent (normal)
galled trees: per-cell counts by leaves and galls for n <= 10, g <= 4,
plus the printed total columns as they appear in the published tables.

Note on the unlabeled totals: the printed total column disagrees with its
own row sums from n = 5 on (it matches the row sums shifted by one row).
The verification engine recomputes row sums and the total-class series and
reports the discrepancy; see ``verify.totals_discrepancy_report``.  The
labeled total column is consistent with its rows.
"""

# unlabeled cells E(n, g), n <= 10, g <= 4
UNLABELED_CELLS = {
    (1, 0): 1,
    (2, 0): 1,
    (3, 0): 1,
    (4, 0): 2,
    (5, 0): 3,
    (6, 0): 6,
    (7, 0): 11,
    (8, 0): 23,
    (9, 0): 46,
    (10, 0): 98,
    (3, 1): 1,
    (4, 1): 4,
    (5, 1): 15,
    (6, 1): 48,
    (7, 1): 148,
    (8, 1): 435,
    (9, 1): 1250,
    (10, 1): 3512,
    (5, 2): 2,
    (6, 2): 18,
    (7, 2): 107,
    (8, 2): 528,
    (9, 2): 2295,
    (10, 2): 9185,
    (7, 3): 6,
    (8, 3): 78,
    (9, 3): 661,
    (10, 3): 4356,
    (9, 4): 19,
    (10, 4): 346,
}

# the total column exactly as printed (see module docstring)
UNLABELED_PRINTED_TOTALS = {
    1: 1,
    2: 1,
    3: 2,
    4: 6,
    5: 72,
    6: 272,
    7: 1064,
    8: 4271,
    9: 17497,
    10: 72483,
}

# labeled cells e(n, g), n <= 10, g <= 4
LABELED_CELLS = {
    (1, 0): 1,
    (2, 0): 1,
    (3, 0): 3,
    (4, 0): 15,
    (5, 0): 105,
    (6, 0): 945,
    (7, 0): 10395,
    (8, 0): 135135,
    (9, 0): 2027025,
    (10, 0): 34459425,
    (3, 1): 3,
    (4, 1): 54,
    (5, 1): 855,
    (6, 1): 14040,
    (7, 1): 248535,
    (8, 1): 4787370,
    (9, 1): 100361835,
    (10, 1): 2282912100,
    (5, 2): 90,
    (6, 2): 5040,
    (7, 2): 197820,
    (8, 2): 6917400,
    (9, 2): 233859150,
    (10, 2): 7927227000,
    (7, 3): 7560,
    (8, 3): 869400,
    (9, 3): 63617400,
    (10, 3): 3850723800,
    (9, 4): 1247400,
    (10, 4): 243243000,
}

LABELED_PRINTED_TOTALS = {
    1: 1,
    2: 1,
    3: 6,
    4: 69,
    5: 1050,
    6: 20025,
    7: 464310,
    8: 12709305,
    9: 401112810,
    10: 14338565325,
}
