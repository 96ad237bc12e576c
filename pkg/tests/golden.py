"""Frozen expected values for the acceptance suite.

The strata matrix maps genus to the counts for even-gap counts
0..(2g // 3).  ``N_BY_GENUS`` are the expected per-genus totals and
``STABLE_COUNTS`` the expected stable stratum counts; ``BOUNDS`` maps gamma
to the expected (lower, upper) bracket and ``RATIOS`` holds the expected
two-decimal renderings (step ratio, census ratio, partial-sum ratio).
"""

STRATA = {
    0: (1,),
    1: (1,),
    2: (1, 1),
    3: (1, 2, 1),
    4: (1, 2, 4),
    5: (1, 2, 6, 3),
    6: (1, 2, 7, 12, 1),
    7: (1, 2, 7, 19, 10),
    8: (1, 2, 7, 21, 32, 4),
    9: (1, 2, 7, 23, 51, 33, 1),
    10: (1, 2, 7, 23, 62, 91, 18),
    11: (1, 2, 7, 23, 65, 142, 98, 5),
    12: (1, 2, 7, 23, 68, 174, 257, 59, 1),
    13: (1, 2, 7, 23, 68, 192, 412, 271, 25),
    14: (1, 2, 7, 23, 68, 197, 514, 678, 197, 6),
    15: (1, 2, 7, 23, 68, 200, 570, 1100, 793, 92, 1),
    16: (1, 2, 7, 23, 68, 200, 602, 1409, 1855, 606, 33),
    17: (1, 2, 7, 23, 68, 200, 609, 1595, 2999, 2191, 343, 7),
    18: (1, 2, 7, 23, 68, 200, 615, 1693, 3890, 4993, 1836, 138, 1),
    19: (1, 2, 7, 23, 68, 200, 615, 1744, 4472, 8126, 6033, 1130, 43),
    20: (1, 2, 7, 23, 68, 200, 615, 1756, 4797, 10723, 13317, 5335, 544, 8),
    21: (1, 2, 7, 23, 68, 200, 615, 1764, 4959, 12528, 21764, 16447, 3624, 191, 1),
    22: (1, 2, 7, 23, 68, 200, 615, 1764, 5034, 13616, 29209, 35392, 15365, 1897, 53),
    23: (1, 2, 7, 23, 68, 200, 615, 1764, 5053, 14191, 34628, 57925, 44575, 11098, 804, 9),
    24: (1, 2, 7, 23, 68, 200, 615, 1764, 5060, 14469, 38096, 78602, 93919, 43262, 6485, 254, 1),
    25: (1, 2, 7, 23, 68, 200, 615, 1764, 5060, 14589, 40098, 94469, 154077, 119669, 33525, 3013, 64),
    26: (1, 2, 7, 23, 68, 200, 615, 1764, 5060, 14611, 41086, 105074, 211576, 247756, 120881, 20945, 1153, 10),
    27: (1, 2, 7, 23, 68, 200, 615, 1764, 5060, 14626, 41541, 111426, 257734, 407238, 320649, 98104, 10873, 335, 1),
}

N_BY_GENUS = (
    1, 1, 2, 4, 7, 12, 23, 39, 67, 118, 204, 343, 592, 1001, 1693, 2857,
    4806, 8045, 13467, 22464, 37396, 62194, 103246, 170963, 282828, 467224,
    770832, 1270267,
)

CENSUS_AT_28 = 2091030

STABLE_COUNTS = (
    1, 2, 7, 23, 68, 200, 615, 1764, 5060, 14626, 41785, 117573, 332475,
    933891, 2609832,
)

BOUNDS = {
    0: (1, 1),
    1: (2, 2),
    2: (7, 7),
    3: (23, 27),
    4: (62, 95),
    5: (153, 266),
    6: (374, 1343),
    7: (831, 4671),
    8: (1810, 16383),
    9: (3905, 52993),
    10: (8277, 192513),
    11: (17295, 666625),
    12: (36211, 2347009),
    13: (75271, 8032257),
    14: (156256, 27377665),
}

RATIOS = {
    0: ("", "1.00", "2.00"),
    1: ("2.00", "1.00", "2.33"),
    2: ("3.50", "1.00", "2.30"),
    3: ("3.29", "1.00", "2.06"),
    4: ("2.96", "1.01", "1.98"),
    5: ("2.94", "0.98", "2.04"),
    6: ("3.08", "1.04", "1.93"),
    7: ("2.87", "1.04", "1.89"),
    8: ("2.87", "1.05", "1.89"),
    9: ("2.89", "1.09", "1.87"),
    10: ("2.86", "1.12", "1.83"),
    11: ("2.81", "1.14", "1.83"),
    12: ("2.83", "1.18", "1.82"),
    13: ("2.81", "1.21", "1.80"),
    14: ("2.79", "1.25", ""),
}
