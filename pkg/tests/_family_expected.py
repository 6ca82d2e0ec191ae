"""Generated data tables; do not edit by hand."""

# Frozen expected classification columns for the named families.
# (side-1 descriptor, side-2 descriptor, finite-quotient index, automorphism group)
GAMMA66_EXPECTED = {
    1: ('{0}', '{0}^*', 4, 'C2xC2'),
    2: ('{0}', '{1}', 4, 'C2xC2'),
    3: ('{0}', '{2}', 4, 'C2xC2'),
    4: ('{0}', '{2}', 4, 'C2xC2'),
    5: ('{0}^*', '{0}^*', 4, 'C2xC2xC2'),
    6: ('{0}^*', '{0}^*', 4, 'C2xC2xC2'),
    7: ('{0}^*', '{0}^*', 4, 'C2xC2xC2'),
    8: ('{0}^*', '{0}^*', 4, 'C2xC2xC2'),
    9: ('{0}^*', '{0}^*', 4, 'C2xC2xC2'),
    10: ('{0}^*', '{0}^*', 4, 'C2xC2xC2'),
    11: ('{0}^*', '{1}', 4, 'C2xC2xC2'),
    12: ('{0}^*', '{1}', 4, 'C2xC2xC2'),
    13: ('{0}^*', '{2}', 4, 'C2xC2xC2'),
    14: ('{0}^*', '{2}', 4, 'C2xC2xC2'),
    15: ('{0}^*', '{2}', 4, 'C2xC2xC2'),
    16: ('{0}^*', '{2}', 4, 'C2xC2xC2'),
    17: ('{0}^*', '{0,2}', 4, 'C2xC2xC2'),
    18: ('{0}^*', '{0,2}', 4, 'C2xC2xC2'),
    19: ('{0}^*', '{0,2}', 4, 'C2xC2xC2'),
    20: ('{0}^*', '{0,2}', 4, 'C2xC2xC2'),
    21: ('{1}', '{0}^*', 4, 'C2xC2'),
    22: ('{1}', '{0}^*', 4, 'C2xC2xC2'),
    23: ('{1}', '{0}^*', 4, 'C2xC2xC2'),
    24: ('{1}', '{0}^*', 4, 'C2xC2xC2'),
    25: ('{1}', '{0}^*', 4, 'C2xC2xC2'),
    26: ('{1}', '{0}^*', 4, 'C2xC2xC2'),
    27: ('{1}', '{0}^*', 4, 'C2xC2xC2'),
    28: ('{1}', '{1}', 4, 'C2xC2'),
    29: ('{1}', '{1}', 4, 'C2xC2xC2'),
    30: ('{1}', '{1}', 4, 'C2xC2xC2'),
    31: ('{1}', '{2}', 4, 'C2xC2'),
    32: ('{1}', '{2}', 4, 'C2xC2xC2'),
    33: ('{1}', '{2}', 4, 'C2xC2xC2'),
    34: ('{1}', '{2}', 4, 'C2xC2'),
    35: ('{1}', '{2}', 4, 'C2xC2xC2'),
    36: ('{1}', '{2}', 4, 'C2xC2xC2'),
    37: ('{1}', '{0,2}', 4, 'C2xC2xC2'),
    38: ('{1}', '{0,2}', 4, 'C2xC2xC2'),
    39: ('{1}', '{0,2}', 4, 'C2xC2xC2'),
    40: ('{1}', '{0,2}', 4, 'C2xC2xC2'),
    41: ('{0,1}', '{0}^*', 4, 'C2xC2'),
    42: ('{0,1}', '{0}^*', 4, 'C2xC2'),
    43: ('{0,1}', '{0}^*', 4, 'C2xC2'),
    44: ('{0,1}', '{0}^*', 4, 'C2xC2'),
    45: ('{0,1}', '{0}^*', 4, 'C2xC2'),
    46: ('{0,1}', '{0}^*', 4, 'C2xC2'),
    47: ('{0,1}', '{1}', 4, 'C2xC2'),
    48: ('{0,1}', '{1}', 4, 'C2xC2'),
    49: ('{0,1}^*', '{0}^*', 4, 'C2xC2'),
    50: ('{0,1}^*', '{0}^*', 4, 'C2xC2'),
    51: ('{0,1}^*', '{1}', 4, 'C2xC2'),
    52: ('{0,1}^*', '{1}', 4, 'C2xC2'),
    53: ('{2}', '{0}^*', 4, 'C2xC2xC2'),
    54: ('{2}', '{0}^*', 4, 'C2xC2xC2'),
    55: ('{2}', '{0}^*', 4, 'C2xC2xC2'),
    56: ('{2}', '{0}^*', 4, 'C2xC2xC2'),
    57: ('{2}', '{0}^*', 4, 'C2xC2'),
    58: ('{2}', '{0}^*', 4, 'C2xC2'),
    59: ('{2}', '{0}^*', 4, 'C2xC2'),
    60: ('{2}', '{0}^*', 4, 'C2xC2'),
    61: ('{2}', '{0}^*', 4, 'C2xC2'),
    62: ('{2}', '{0}^*', 4, 'C2xC2'),
    63: ('{2}', '{1}', 4, 'C2xC2xC2'),
    64: ('{2}', '{1}', 4, 'C2xC2xC2'),
    65: ('{2}', '{1}', 4, 'C2xC2xC2'),
    66: ('{2}', '{1}', 4, 'C2xC2xC2'),
    67: ('{2}', '{1}', 4, 'C2xC2'),
    68: ('{2}', '{1}', 4, 'C2xC2'),
    69: ('{2}', '{2}', 4, 'C2xC2xC2'),
    70: ('{2}', '{2}', 4, 'C2xC2xC2'),
    71: ('{2}', '{2}', 4, 'C2xC2xC2'),
    72: ('{2}', '{2}', 4, 'C2xC2xC2'),
    73: ('{2}', '{2}', 4, 'C2xC2'),
    74: ('{2}', '{2}', 4, 'C2xC2'),
    75: ('{2}', '{2}', 4, 'C2xC2xC2'),
    76: ('{2}', '{2}', 4, 'C2xC2xC2'),
    77: ('{2}', '{2}', 4, 'C2xC2xC2'),
    78: ('{2}', '{2}', 4, 'C2xC2xC2'),
    79: ('{2}', '{2}', 4, 'C2xC2'),
    80: ('{2}', '{2}', 4, 'C2xC2'),
    81: ('{2}', '{0,2}', 4, 'C2xC2'),
    82: ('{2}', '{0,2}', 4, 'C2xC2'),
    83: ('{2}', '{0,2}', 4, 'C2xC2'),
    84: ('{2}', '{0,2}', 4, 'C2xC2'),
    85: ('{0,2}', '{0}^*', 4, 'C2xC2'),
    86: ('{0,2}', '{0}^*', 4, 'C2xC2'),
    87: ('{0,2}', '{0}^*', 4, 'C2xC2'),
    88: ('{0,2}', '{0}^*', 4, 'C2xC2'),
    89: ('{0,2}', '{0}^*', 4, 'C2xC2'),
    90: ('{0,2}', '{0}^*', 4, 'C2xC2'),
    91: ('{0,2}', '{1}', 4, 'C2xC2'),
    92: ('{0,2}', '{1}', 4, 'C2xC2'),
    93: ('{0,2}^*', '{0}^*', 4, 'C2xC2'),
    94: ('{0,2}^*', '{0}^*', 4, 'C2xC2'),
    95: ('{0,2}^*', '{1}', 4, 'C2xC2'),
    96: ('{0,2}^*', '{1}', 4, 'C2xC2'),
    97: ('{0}', '{0}^*', 4, 'C2xC2xC2'),
    98: ('{0}', '{0}^*', 4, 'C2xC2xC2'),
    99: ('{0}', '{0}^*', 4, 'C2xC2xC2'),
    100: ('{0}', '{0}^*', 4, 'C2xC2xC2'),
    101: ('{0}', '{0}^*', 4, 'C2xC2xC2'),
    102: ('{0}', '{0}^*', 4, 'C2xC2xC2'),
    103: ('{0}', '{1}', 4, 'C2xC2xC2'),
    104: ('{0}', '{1}', 12, 'C2xC2xC2'),
    105: ('{0}', '{1}', 4, 'C2xC2xC2'),
    106: ('{0}', '{1}', 4, 'C2xC2xC2'),
    107: ('{0}', '{1}', 4, 'C2xC2xC2'),
    108: ('{0}', '{1}', 4, 'C2xC2xC2'),
    109: ('{0}', '{1}', 4, 'C2xC2xC2'),
    110: ('{0}', '{1}', 4, 'C2xC2xC2'),
    111: ('{0}', '{1}', 4, 'C2xC2xC2'),
    112: ('{0}', '{1}', 4, 'C2xC2xC2'),
    113: ('{0}', '{0,1}', 4, 'C2xC2xC2'),
    114: ('{0}', '{0,1}', 4, 'C2xC2xC2'),
    115: ('{0}', '{1,2}', 4, 'C2xC2xC2'),
    116: ('{0}', '{1,2}', 12, 'C2xC2xC2'),
    117: ('{0}', '{1,2}', 4, 'C2xC2xC2'),
    118: ('{0}', '{1,2}', 4, 'C2xC2xC2'),
    119: ('{0}', '{1,2}', 4, 'C2xC2xC2'),
    120: ('{0}', '{1,2}', 4, 'C2xC2xC2'),
    121: ('{0}', '{0,1,2}', 4, 'C2xC2xC2'),
    122: ('{0}', '{0,1,2}', 4, 'C2xC2xC2'),
    123: ('{0}', '{0,1,2}', 4, 'C2xC2xC2'),
    124: ('{0}', '{0,1,2}', 4, 'C2xC2xC2'),
    125: ('{0}', '{2,3}', 4, 'C2xC2xC2'),
    126: ('{0}', '{2,3}', 4, 'C2xC2xC2'),
    127: ('{0}', '{2,3}', 4, 'C2xC2xC2'),
    128: ('{0}', '{2,3}', 4, 'C2xC2xC2'),
    129: ('{0}^*', '{0}^*', 4, 'C2xC2'),
    130: ('{0}^*', '{1}', 4, 'C2xC2'),
    131: ('{0}^*', '{1}', 4, 'C2xC2'),
    132: ('{0}^*', '{1}', 4, 'C2xC2'),
    133: ('{0}^*', '{0,1}', 4, 'C2xC2'),
    134: ('{0}^*', '{1,2}', 4, 'C2xC2'),
    135: ('{0}^*', '{1,2}', 4, 'C2xC2'),
    136: ('{0}^*', '{1,2}', 4, 'C2xC2'),
    137: ('{2}', '{0}^*', 4, 'C2xC2xC2'),
    138: ('{2}', '{0}^*', 4, 'C2xC2xC2'),
    139: ('{2}', '{0}^*', 4, 'C2xC2'),
    140: ('{2}', '{1}', 4, 'C2xC2xC2'),
    141: ('{2}', '{1}', 4, 'C2xC2xC2'),
    142: ('{2}', '{1}', 4, 'C2xC2xC2'),
    143: ('{2}', '{1}', 4, 'C2xC2xC2'),
    144: ('{2}', '{1}', 4, 'C2xC2'),
    145: ('{2}', '{1}', 4, 'C2xC2'),
    146: ('{2}', '{1}', 4, 'C2xC2xC2'),
    147: ('{2}', '{1}', 4, 'C2xC2xC2'),
    148: ('{2}', '{1}', 4, 'C2xC2'),
    149: ('{2}', '{0,1}', 4, 'C2xC2xC2'),
    150: ('{2}', '{0,1}', 4, 'C2xC2xC2'),
    151: ('{2}', '{0,1}', 4, 'C2xC2'),
    152: ('{2}', '{1,2}', 4, 'C2xC2xC2'),
    153: ('{2}', '{1,2}', 4, 'C2xC2xC2'),
    154: ('{2}', '{1,2}', 4, 'C2xC2'),
    155: ('{2}', '{1,2}', 4, 'C2xC2xC2'),
    156: ('{2}', '{1,2}', 4, 'C2xC2xC2'),
    157: ('{2}', '{1,2}', 4, 'C2xC2xC2'),
    158: ('{2}', '{1,2}', 4, 'C2xC2xC2'),
    159: ('{2}', '{1,2}', 4, 'C2xC2'),
    160: ('{2}', '{1,2}', 4, 'C2xC2'),
}

GAMMA45_EXPECTED = {
    1: ('Sym(4)', 'Sym(5)', 4, 'C2xC2'),
    2: ('Sym(4)', 'Sym(5)', 4, 'C2xC2'),
    3: ('Sym(4)', 'Sym(5)', 4, 'C2xC2'),
    4: ('Sym(4)', 'Sym(5)', 4, 'C2xC2'),
    5: ('Sym(4)', 'Sym(5)', 4, 'C2xC2'),
    6: ('Sym(4)', 'Sym(5)', 4, 'C2xC2'),
    7: ('Sym(4)', 'Sym(5)', 4, 'C2xC2'),
    8: ('Sym(4)', 'Sym(5)', 4, 'C2xC2'),
    9: ('Sym(4)', 'Sym(5)', 4, 'C2xC2'),
    10: ('Sym(4)', 'Sym(5)', 4, 'C2xC2'),
    11: ('Sym(4)', 'Sym(5)', 4, 'C2xC2'),
    12: ('Sym(4)', 'Sym(5)', 4, 'C2xC2'),
    13: ('Sym(4)', 'Sym(5)', 4, 'C2xC2'),
    14: ('Sym(4)', 'Sym(5)', 4, 'C2xC2'),
    15: ('Sym(4)', 'Sym(5)', 4, 'C2xC2'),
    16: ('Sym(4)', 'Sym(5)', 4, 'C2xC2'),
    17: ('Sym(4)', 'Sym(5)', 4, 'C2xC2'),
    18: ('Sym(4)', 'Sym(5)', 4, 'C2xC2'),
    19: ('Sym(4)', 'Sym(5)', 4, 'C2xC2'),
    20: ('Sym(4)', 'Sym(5)', 4, 'C2xC2'),
    21: ('Sym(4)', 'Sym(5)', 4, 'C2xC2'),
    22: ('Sym(4)', 'Sym(5)', 4, 'C2xC2'),
    23: ('Sym(4)', 'Sym(5)', 4, 'C2xC2'),
    24: ('Sym(4)', 'Sym(5)', 4, 'C2xC2'),
    25: ('Sym(4)', 'Sym(5)', 4, 'C2xC2'),
    26: ('Sym(4)', 'Sym(5)', 4, 'C2xC2'),
    27: ('Sym(4)', 'Sym(5)', 4, 'C2xC2'),
    28: ('Sym(4)', 'Sym(5)', 4, 'C2xC2'),
    29: ('Sym(4)', 'Sym(5)', 4, 'C2xC2'),
    30: ('Sym(4)', 'Sym(5)', 4, 'C2xC2'),
    31: ('Sym(4)', 'Sym(5)', 4, 'C2xC2'),
    32: ('Sym(4)', 'Sym(5)', 4, 'C2xC2'),
    33: ('Sym(4)', 'Sym(5)', 8, 'C2xC2'),
    34: ('Sym(4)', 'Sym(5)', 8, 'C2xC2'),
    35: ('Sym(4)', 'Alt(5)', 8, 'C2xC2'),
    36: ('Sym(4)', 'Alt(5)', 8, 'C2xC2'),
    37: ('Sym(4)', 'Sym(5)', 8, 'C2xC2'),
    38: ('Sym(4)', 'Alt(5)', 8, 'C2xC2'),
    39: ('Sym(4)', 'Sym(5)', 4, 'C2xC2'),
    40: ('Sym(4)', 'Sym(5)', 4, 'C2xC2'),
    41: ('Sym(4)', 'Sym(5)', 4, 'C2xC2'),
    42: ('Sym(4)', 'Sym(5)', 4, 'C2xC2'),
    43: ('Sym(4)', 'Sym(5)', 4, 'C2xC2'),
    44: ('Sym(4)', 'Sym(5)', 4, 'C2xC2'),
    45: ('Sym(4)', 'Sym(5)', 4, 'C2xC2'),
    46: ('Sym(4)', 'Sym(5)', 4, 'C2xC2'),
    47: ('Sym(4)', 'Sym(5)', 4, 'C2xC2'),
    48: ('Sym(4)', 'Sym(5)', 4, 'C2xC2'),
    49: ('Sym(4)', 'Sym(5)', 4, 'C2xC2'),
    50: ('Sym(4)', 'Sym(5)', 4, 'C2xC2'),
    51: ('Sym(4)', 'Sym(5)', 4, 'C2xC2'),
    52: ('Sym(4)', 'Sym(5)', 4, 'C2xC2'),
    53: ('Sym(4)', 'Sym(5)', 4, 'C2xC2'),
    54: ('Sym(4)', 'Sym(5)', 4, 'C2xC2'),
    55: ('Sym(4)', 'Sym(5)', 8, 'C2xC2'),
    56: ('Sym(4)', 'Sym(5)', 8, 'C2xC2'),
    57: ('Sym(4)', 'Sym(5)', 8, 'C2xC2'),
    58: ('Sym(4)', 'Sym(5)', 8, 'C2xC2'),
    59: ('Sym(4)', 'Sym(5)', 8, 'C2xC2'),
    60: ('Sym(4)', 'Sym(5)', 8, 'C2xC2'),
}
