"""Reference census values used by the verification runner.

Cross-checked three ways: the per-genus totals match the public
sequence OEIS A007323, every row satisfies total == sum(counts), and
the stable-count sequence below agrees with the stratum matrix at
genus 3 * gamma as well as with independent closed-set and fiber
enumerations."""

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
    25: (1, 2, 7, 23, 68, 200, 615, 1764, 5060, 14589, 40078, 94469, 154077, 119669, 33525, 3013, 64),
    26: (1, 2, 7, 23, 68, 200, 615, 1764, 5060, 14611, 41086, 105074, 211576, 247756, 120881, 20945, 1153, 10),
    27: (1, 2, 7, 23, 68, 200, 615, 1764, 5060, 14626, 41541, 111426, 257734, 407238, 320649, 98104, 10873, 335, 1),
    28: (1, 2, 7, 23, 68, 200, 615, 1764, 5060, 14626, 41725, 114889, 290192, 565331, 652952, 333037, 65884, 4577, 77),
}

TOTALS = {g: sum(row) for g, row in STRATA.items()}

STABLE_COUNTS = (1, 2, 7, 23, 68, 200, 615, 1764, 5060, 14626, 41785, 117573, 332475, 933891, 2609832)

