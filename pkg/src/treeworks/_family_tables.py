"""Generated data tables; do not edit by hand."""

# Extra squares defining the six-by-six virtually simple family, keyed by index.
# Each entry: (tau1, tau2, extra squares beyond the common base).
GAMMA66_EXTRA = {
    1: (0, 0, ['a1 b3 a1 b3', 'a1 b3^-1 a1 b3^-1', 'a2 b3 a2 b3', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a3^-1 b1^-1', 'a3 b2 a3 b3', 'a3 b2^-1 a3 b2^-1']),
    2: (0, 0, ['a1 b3 a1 b3^-1', 'a2 b3 a2 b3', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a3^-1 b1^-1', 'a3 b2 a3 b3', 'a3 b2^-1 a3 b2^-1']),
    3: (0, 0, ['a1 b3 a1 b3^-1', 'a2 b3 a2 b3', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a3^-1 b1', 'a3 b2 a3 b3', 'a3 b2^-1 a3 b2^-1']),
    4: (0, 0, ['a1 b3 a1 b3', 'a1 b3^-1 a1 b3^-1', 'a2 b3 a2 b3', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a3^-1 b1', 'a3 b2 a3 b3', 'a3 b2^-1 a3 b2^-1']),
    5: (0, 0, ['a1 b3 a1 b3', 'a1 b3^-1 a2 b3^-1', 'a2 b3 a3 b3', 'a3 b1 a3 b3^-1', 'a3 b2 a3^-1 b2^-1', 'a3 b1^-1 a3 b1^-1']),
    6: (0, 0, ['a1 b3 a1 b3', 'a1 b3^-1 a2 b3^-1', 'a2 b3 a3 b3', 'a3 b1 a3 b1', 'a3 b2 a3^-1 b2^-1', 'a3 b3^-1 a3 b1^-1']),
    7: (0, 0, ['a1 b3 a1 b3', 'a1 b3^-1 a3 b3^-1', 'a2 b3 a2^-1 b3', 'a3 b1 a3 b3', 'a3 b2 a3^-1 b2^-1', 'a3 b1^-1 a3 b1^-1']),
    8: (0, 0, ['a1 b3 a1 b3', 'a1 b3^-1 a3 b3^-1', 'a2 b3 a2^-1 b3', 'a3 b1 a3 b1', 'a3 b2 a3^-1 b2^-1', 'a3 b3 a3 b1^-1']),
    9: (0, 0, ['a1 b3 a1 b3', 'a1 b3^-1 a2^-1 b3^-1', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a3 b3', 'a3 b2 a3^-1 b2^-1', 'a3 b1^-1 a3 b1^-1']),
    10: (0, 0, ['a1 b3 a1 b3', 'a1 b3^-1 a2^-1 b3^-1', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a3 b1', 'a3 b2 a3^-1 b2^-1', 'a3 b3 a3 b1^-1']),
    11: (0, 0, ['a1 b3 a1^-1 b3^-1', 'a2 b3 a2 b3', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a3 b3', 'a3 b2 a3^-1 b2^-1', 'a3 b1^-1 a3 b1^-1']),
    12: (0, 0, ['a1 b3 a1^-1 b3^-1', 'a2 b3 a2 b3', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a3 b1', 'a3 b2 a3^-1 b2^-1', 'a3 b3 a3 b1^-1']),
    13: (0, 0, ['a1 b3 a1^-1 b3^-1', 'a2 b3 a2 b3', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a3 b3', 'a3 b2 a3^-1 b2', 'a3 b1^-1 a3 b1^-1']),
    14: (0, 0, ['a1 b3 a1^-1 b3^-1', 'a2 b3 a2 b3', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a3 b1', 'a3 b2 a3^-1 b2', 'a3 b3 a3 b1^-1']),
    15: (0, 0, ['a1 b3 a1 b3', 'a1 b3^-1 a3 b3^-1', 'a2 b3 a2^-1 b3', 'a3 b1 a3 b3', 'a3 b2 a3^-1 b2', 'a3 b1^-1 a3 b1^-1']),
    16: (0, 0, ['a1 b3 a1 b3', 'a1 b3^-1 a3 b3^-1', 'a2 b3 a2^-1 b3', 'a3 b1 a3 b1', 'a3 b2 a3^-1 b2', 'a3 b3 a3 b1^-1']),
    17: (0, 0, ['a1 b3 a1 b3', 'a1 b3^-1 a2 b3^-1', 'a2 b3 a3 b3', 'a3 b1 a3 b3^-1', 'a3 b2 a3^-1 b2', 'a3 b1^-1 a3 b1^-1']),
    18: (0, 0, ['a1 b3 a1 b3', 'a1 b3^-1 a2 b3^-1', 'a2 b3 a3 b3', 'a3 b1 a3 b1', 'a3 b2 a3^-1 b2', 'a3 b3^-1 a3 b1^-1']),
    19: (0, 0, ['a1 b3 a1 b3', 'a1 b3^-1 a2^-1 b3^-1', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a3 b3', 'a3 b2 a3^-1 b2', 'a3 b1^-1 a3 b1^-1']),
    20: (0, 0, ['a1 b3 a1 b3', 'a1 b3^-1 a2^-1 b3^-1', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a3 b1', 'a3 b2 a3^-1 b2', 'a3 b3 a3 b1^-1']),
    21: (0, 0, ['a1 b3 a1 b3', 'a1 b3^-1 a1 b3^-1', 'a2 b3 a2 b3', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a3 b1^-1', 'a3 b2 a3 b3', 'a3 b2^-1 a3 b2^-1']),
    22: (0, 0, ['a1 b3 a1 b3', 'a1 b3^-1 a2 b3^-1', 'a2 b3 a3 b3', 'a3 b1 a3 b3^-1', 'a3 b2 a3 b2^-1', 'a3 b1^-1 a3 b1^-1']),
    23: (0, 0, ['a1 b3 a1 b3', 'a1 b3^-1 a2 b3^-1', 'a2 b3 a3 b3', 'a3 b1 a3 b1', 'a3 b2 a3 b2^-1', 'a3 b3^-1 a3 b1^-1']),
    24: (0, 0, ['a1 b3 a1 b3', 'a1 b3^-1 a3 b3^-1', 'a2 b3 a2^-1 b3', 'a3 b1 a3 b3', 'a3 b2 a3 b2^-1', 'a3 b1^-1 a3 b1^-1']),
    25: (0, 0, ['a1 b3 a1 b3', 'a1 b3^-1 a3 b3^-1', 'a2 b3 a2^-1 b3', 'a3 b1 a3 b1', 'a3 b2 a3 b2^-1', 'a3 b3 a3 b1^-1']),
    26: (0, 0, ['a1 b3 a1 b3', 'a1 b3^-1 a2^-1 b3^-1', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a3 b3', 'a3 b2 a3 b2^-1', 'a3 b1^-1 a3 b1^-1']),
    27: (0, 0, ['a1 b3 a1 b3', 'a1 b3^-1 a2^-1 b3^-1', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a3 b1', 'a3 b2 a3 b2^-1', 'a3 b3 a3 b1^-1']),
    28: (0, 0, ['a1 b3 a1 b3^-1', 'a2 b3 a2 b3', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a3 b1^-1', 'a3 b2 a3 b3', 'a3 b2^-1 a3 b2^-1']),
    29: (0, 0, ['a1 b3 a1^-1 b3^-1', 'a2 b3 a2 b3', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a3 b3', 'a3 b2 a3 b2^-1', 'a3 b1^-1 a3 b1^-1']),
    30: (0, 0, ['a1 b3 a1^-1 b3^-1', 'a2 b3 a2 b3', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a3 b1', 'a3 b2 a3 b2^-1', 'a3 b3 a3 b1^-1']),
    31: (0, 0, ['a1 b3 a1 b3^-1', 'a2 b3 a2 b3', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a3 b1', 'a3 b2 a3 b3', 'a3 b2^-1 a3 b2^-1', 'a3 b1^-1 a3 b1^-1']),
    32: (0, 0, ['a1 b3 a1^-1 b3^-1', 'a2 b3 a2 b3', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a3 b3', 'a3 b2 a3 b2', 'a3 b2^-1 a3 b2^-1', 'a3 b1^-1 a3 b1^-1']),
    33: (0, 0, ['a1 b3 a1^-1 b3^-1', 'a2 b3 a2 b3', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a3 b1', 'a3 b2 a3 b2', 'a3 b3 a3 b1^-1', 'a3 b2^-1 a3 b2^-1']),
    34: (0, 0, ['a1 b3 a1 b3', 'a1 b3^-1 a1 b3^-1', 'a2 b3 a2 b3', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a3 b1', 'a3 b2 a3 b3', 'a3 b2^-1 a3 b2^-1', 'a3 b1^-1 a3 b1^-1']),
    35: (0, 0, ['a1 b3 a1 b3', 'a1 b3^-1 a3 b3^-1', 'a2 b3 a2^-1 b3', 'a3 b1 a3 b3', 'a3 b2 a3 b2', 'a3 b2^-1 a3 b2^-1', 'a3 b1^-1 a3 b1^-1']),
    36: (0, 0, ['a1 b3 a1 b3', 'a1 b3^-1 a3 b3^-1', 'a2 b3 a2^-1 b3', 'a3 b1 a3 b1', 'a3 b2 a3 b2', 'a3 b3 a3 b1^-1', 'a3 b2^-1 a3 b2^-1']),
    37: (0, 0, ['a1 b3 a1 b3', 'a1 b3^-1 a2 b3^-1', 'a2 b3 a3 b3', 'a3 b1 a3 b3^-1', 'a3 b2 a3 b2', 'a3 b2^-1 a3 b2^-1', 'a3 b1^-1 a3 b1^-1']),
    38: (0, 0, ['a1 b3 a1 b3', 'a1 b3^-1 a2 b3^-1', 'a2 b3 a3 b3', 'a3 b1 a3 b1', 'a3 b2 a3 b2', 'a3 b3^-1 a3 b1^-1', 'a3 b2^-1 a3 b2^-1']),
    39: (0, 0, ['a1 b3 a1 b3', 'a1 b3^-1 a2^-1 b3^-1', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a3 b3', 'a3 b2 a3 b2', 'a3 b2^-1 a3 b2^-1', 'a3 b1^-1 a3 b1^-1']),
    40: (0, 0, ['a1 b3 a1 b3', 'a1 b3^-1 a2^-1 b3^-1', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a3 b1', 'a3 b2 a3 b2', 'a3 b3 a3 b1^-1', 'a3 b2^-1 a3 b2^-1']),
    41: (0, 0, ['a1 b3 a1 b3', 'a1 b3^-1 a2 b3^-1', 'a2 b3 a3 b3', 'a3 b1 a3 b2^-1', 'a3 b2 a3 b3^-1', 'a3 b1^-1 a3 b1^-1']),
    42: (0, 0, ['a1 b3 a1 b3', 'a1 b3^-1 a2 b3^-1', 'a2 b3 a3 b3', 'a3 b1 a3 b1', 'a3 b2 a3 b1^-1', 'a3 b3^-1 a3 b2^-1']),
    43: (0, 0, ['a1 b3 a1 b3', 'a1 b3^-1 a3 b3^-1', 'a2 b3 a2^-1 b3', 'a3 b1 a3 b2^-1', 'a3 b2 a3 b3', 'a3 b1^-1 a3 b1^-1']),
    44: (0, 0, ['a1 b3 a1 b3', 'a1 b3^-1 a3 b3^-1', 'a2 b3 a2^-1 b3', 'a3 b1 a3 b1', 'a3 b2 a3 b1^-1', 'a3 b3 a3 b2^-1']),
    45: (0, 0, ['a1 b3 a1 b3', 'a1 b3^-1 a2^-1 b3^-1', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a3 b2^-1', 'a3 b2 a3 b3', 'a3 b1^-1 a3 b1^-1']),
    46: (0, 0, ['a1 b3 a1 b3', 'a1 b3^-1 a2^-1 b3^-1', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a3 b1', 'a3 b2 a3 b1^-1', 'a3 b3 a3 b2^-1']),
    47: (0, 0, ['a1 b3 a1^-1 b3^-1', 'a2 b3 a2 b3', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a3 b2^-1', 'a3 b2 a3 b3', 'a3 b1^-1 a3 b1^-1']),
    48: (0, 0, ['a1 b3 a1^-1 b3^-1', 'a2 b3 a2 b3', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a3 b1', 'a3 b2 a3 b1^-1', 'a3 b3 a3 b2^-1']),
    49: (0, 0, ['a1 b3 a1 b3', 'a1 b3^-1 a1 b3^-1', 'a2 b3 a2 b3', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a3 b2^-1', 'a3 b2 a3 b2', 'a3 b3 a3 b1^-1']),
    50: (0, 0, ['a1 b3 a1 b3', 'a1 b3^-1 a1 b3^-1', 'a2 b3 a2 b3', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a3 b3', 'a3 b2 a3 b1^-1', 'a3 b2^-1 a3 b2^-1']),
    51: (0, 0, ['a1 b3 a1 b3^-1', 'a2 b3 a2 b3', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a3 b2^-1', 'a3 b2 a3 b2', 'a3 b3 a3 b1^-1']),
    52: (0, 0, ['a1 b3 a1 b3^-1', 'a2 b3 a2 b3', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a3 b3', 'a3 b2 a3 b1^-1', 'a3 b2^-1 a3 b2^-1']),
    53: (0, 0, ['a1 b3 a1 b3', 'a1 b3^-1 a1 b3^-1', 'a2 b3 a2 b3', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a3 b3', 'a3 b2 a3 b2^-1', 'a3 b1^-1 a3 b1^-1']),
    54: (0, 0, ['a1 b3 a1 b3', 'a1 b3^-1 a1 b3^-1', 'a2 b3 a2 b3', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a3 b3', 'a3 b2 a3^-1 b2^-1', 'a3 b1^-1 a3 b1^-1']),
    55: (0, 0, ['a1 b3 a1 b3', 'a1 b3^-1 a1 b3^-1', 'a2 b3 a2 b3', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a3 b1', 'a3 b2 a3 b2^-1', 'a3 b3 a3 b1^-1']),
    56: (0, 0, ['a1 b3 a1 b3', 'a1 b3^-1 a1 b3^-1', 'a2 b3 a2 b3', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a3 b1', 'a3 b2 a3^-1 b2^-1', 'a3 b3 a3 b1^-1']),
    57: (0, 0, ['a1 b3 a1 b3', 'a1 b3^-1 a2 b3^-1', 'a2 b3 a3 b3', 'a3 b1 a3 b1^-1', 'a3 b2 a3 b3^-1', 'a3 b2^-1 a3 b2^-1']),
    58: (0, 0, ['a1 b3 a1 b3', 'a1 b3^-1 a2 b3^-1', 'a2 b3 a3 b3', 'a3 b1 a3^-1 b1^-1', 'a3 b2 a3 b3^-1', 'a3 b2^-1 a3 b2^-1']),
    59: (0, 0, ['a1 b3 a1 b3', 'a1 b3^-1 a3 b3^-1', 'a2 b3 a2^-1 b3', 'a3 b1 a3 b1^-1', 'a3 b2 a3 b3', 'a3 b2^-1 a3 b2^-1']),
    60: (0, 0, ['a1 b3 a1 b3', 'a1 b3^-1 a3 b3^-1', 'a2 b3 a2^-1 b3', 'a3 b1 a3^-1 b1^-1', 'a3 b2 a3 b3', 'a3 b2^-1 a3 b2^-1']),
    61: (0, 0, ['a1 b3 a1 b3', 'a1 b3^-1 a2^-1 b3^-1', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a3 b1^-1', 'a3 b2 a3 b3', 'a3 b2^-1 a3 b2^-1']),
    62: (0, 0, ['a1 b3 a1 b3', 'a1 b3^-1 a2^-1 b3^-1', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a3^-1 b1^-1', 'a3 b2 a3 b3', 'a3 b2^-1 a3 b2^-1']),
    63: (0, 0, ['a1 b3 a1 b3^-1', 'a2 b3 a2 b3', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a3 b3', 'a3 b2 a3 b2^-1', 'a3 b1^-1 a3 b1^-1']),
    64: (0, 0, ['a1 b3 a1 b3^-1', 'a2 b3 a2 b3', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a3 b3', 'a3 b2 a3^-1 b2^-1', 'a3 b1^-1 a3 b1^-1']),
    65: (0, 0, ['a1 b3 a1 b3^-1', 'a2 b3 a2 b3', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a3 b1', 'a3 b2 a3 b2^-1', 'a3 b3 a3 b1^-1']),
    66: (0, 0, ['a1 b3 a1 b3^-1', 'a2 b3 a2 b3', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a3 b1', 'a3 b2 a3^-1 b2^-1', 'a3 b3 a3 b1^-1']),
    67: (0, 0, ['a1 b3 a1^-1 b3^-1', 'a2 b3 a2 b3', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a3 b1^-1', 'a3 b2 a3 b3', 'a3 b2^-1 a3 b2^-1']),
    68: (0, 0, ['a1 b3 a1^-1 b3^-1', 'a2 b3 a2 b3', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a3^-1 b1^-1', 'a3 b2 a3 b3', 'a3 b2^-1 a3 b2^-1']),
    69: (0, 0, ['a1 b3 a1 b3^-1', 'a2 b3 a2 b3', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a3 b3', 'a3 b2 a3 b2', 'a3 b2^-1 a3 b2^-1', 'a3 b1^-1 a3 b1^-1']),
    70: (0, 0, ['a1 b3 a1 b3^-1', 'a2 b3 a2 b3', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a3 b3', 'a3 b2 a3^-1 b2', 'a3 b1^-1 a3 b1^-1']),
    71: (0, 0, ['a1 b3 a1 b3^-1', 'a2 b3 a2 b3', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a3 b1', 'a3 b2 a3 b2', 'a3 b3 a3 b1^-1', 'a3 b2^-1 a3 b2^-1']),
    72: (0, 0, ['a1 b3 a1 b3^-1', 'a2 b3 a2 b3', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a3 b1', 'a3 b2 a3^-1 b2', 'a3 b3 a3 b1^-1']),
    73: (0, 0, ['a1 b3 a1^-1 b3^-1', 'a2 b3 a2 b3', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a3 b1', 'a3 b2 a3 b3', 'a3 b2^-1 a3 b2^-1', 'a3 b1^-1 a3 b1^-1']),
    74: (0, 0, ['a1 b3 a1^-1 b3^-1', 'a2 b3 a2 b3', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a3^-1 b1', 'a3 b2 a3 b3', 'a3 b2^-1 a3 b2^-1']),
    75: (0, 0, ['a1 b3 a1 b3', 'a1 b3^-1 a1 b3^-1', 'a2 b3 a2 b3', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a3 b3', 'a3 b2 a3 b2', 'a3 b2^-1 a3 b2^-1', 'a3 b1^-1 a3 b1^-1']),
    76: (0, 0, ['a1 b3 a1 b3', 'a1 b3^-1 a1 b3^-1', 'a2 b3 a2 b3', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a3 b3', 'a3 b2 a3^-1 b2', 'a3 b1^-1 a3 b1^-1']),
    77: (0, 0, ['a1 b3 a1 b3', 'a1 b3^-1 a1 b3^-1', 'a2 b3 a2 b3', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a3 b1', 'a3 b2 a3 b2', 'a3 b3 a3 b1^-1', 'a3 b2^-1 a3 b2^-1']),
    78: (0, 0, ['a1 b3 a1 b3', 'a1 b3^-1 a1 b3^-1', 'a2 b3 a2 b3', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a3 b1', 'a3 b2 a3^-1 b2', 'a3 b3 a3 b1^-1']),
    79: (0, 0, ['a1 b3 a1 b3', 'a1 b3^-1 a3 b3^-1', 'a2 b3 a2^-1 b3', 'a3 b1 a3 b1', 'a3 b2 a3 b3', 'a3 b2^-1 a3 b2^-1', 'a3 b1^-1 a3 b1^-1']),
    80: (0, 0, ['a1 b3 a1 b3', 'a1 b3^-1 a3 b3^-1', 'a2 b3 a2^-1 b3', 'a3 b1 a3^-1 b1', 'a3 b2 a3 b3', 'a3 b2^-1 a3 b2^-1']),
    81: (0, 0, ['a1 b3 a1 b3', 'a1 b3^-1 a2 b3^-1', 'a2 b3 a3 b3', 'a3 b1 a3 b1', 'a3 b2 a3 b3^-1', 'a3 b2^-1 a3 b2^-1', 'a3 b1^-1 a3 b1^-1']),
    82: (0, 0, ['a1 b3 a1 b3', 'a1 b3^-1 a2 b3^-1', 'a2 b3 a3 b3', 'a3 b1 a3^-1 b1', 'a3 b2 a3 b3^-1', 'a3 b2^-1 a3 b2^-1']),
    83: (0, 0, ['a1 b3 a1 b3', 'a1 b3^-1 a2^-1 b3^-1', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a3 b1', 'a3 b2 a3 b3', 'a3 b2^-1 a3 b2^-1', 'a3 b1^-1 a3 b1^-1']),
    84: (0, 0, ['a1 b3 a1 b3', 'a1 b3^-1 a2^-1 b3^-1', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a3^-1 b1', 'a3 b2 a3 b3', 'a3 b2^-1 a3 b2^-1']),
    85: (0, 0, ['a1 b3 a1 b3', 'a1 b3^-1 a2 b3^-1', 'a2 b3 a3 b3', 'a3 b1 a3 b2^-1', 'a3 b2 a3 b2', 'a3 b3^-1 a3 b1^-1']),
    86: (0, 0, ['a1 b3 a1 b3', 'a1 b3^-1 a2 b3^-1', 'a2 b3 a3 b3', 'a3 b1 a3 b3^-1', 'a3 b2 a3 b1^-1', 'a3 b2^-1 a3 b2^-1']),
    87: (0, 0, ['a1 b3 a1 b3', 'a1 b3^-1 a3 b3^-1', 'a2 b3 a2^-1 b3', 'a3 b1 a3 b2^-1', 'a3 b2 a3 b2', 'a3 b3 a3 b1^-1']),
    88: (0, 0, ['a1 b3 a1 b3', 'a1 b3^-1 a3 b3^-1', 'a2 b3 a2^-1 b3', 'a3 b1 a3 b3', 'a3 b2 a3 b1^-1', 'a3 b2^-1 a3 b2^-1']),
    89: (0, 0, ['a1 b3 a1 b3', 'a1 b3^-1 a2^-1 b3^-1', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a3 b2^-1', 'a3 b2 a3 b2', 'a3 b3 a3 b1^-1']),
    90: (0, 0, ['a1 b3 a1 b3', 'a1 b3^-1 a2^-1 b3^-1', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a3 b3', 'a3 b2 a3 b1^-1', 'a3 b2^-1 a3 b2^-1']),
    91: (0, 0, ['a1 b3 a1^-1 b3^-1', 'a2 b3 a2 b3', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a3 b2^-1', 'a3 b2 a3 b2', 'a3 b3 a3 b1^-1']),
    92: (0, 0, ['a1 b3 a1^-1 b3^-1', 'a2 b3 a2 b3', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a3 b3', 'a3 b2 a3 b1^-1', 'a3 b2^-1 a3 b2^-1']),
    93: (0, 0, ['a1 b3 a1 b3', 'a1 b3^-1 a1 b3^-1', 'a2 b3 a2 b3', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a3 b2^-1', 'a3 b2 a3 b3', 'a3 b1^-1 a3 b1^-1']),
    94: (0, 0, ['a1 b3 a1 b3', 'a1 b3^-1 a1 b3^-1', 'a2 b3 a2 b3', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a3 b1', 'a3 b2 a3 b1^-1', 'a3 b3 a3 b2^-1']),
    95: (0, 0, ['a1 b3 a1 b3^-1', 'a2 b3 a2 b3', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a3 b2^-1', 'a3 b2 a3 b3', 'a3 b1^-1 a3 b1^-1']),
    96: (0, 0, ['a1 b3 a1 b3^-1', 'a2 b3 a2 b3', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a3 b1', 'a3 b2 a3 b1^-1', 'a3 b3 a3 b2^-1']),
    97: (2, 0, ['a1 b3 a1 b3', 'a1 b3^-1 a2 b3^-1', 'a2 b3 a3 b3', 'a3 b1 a3 b1', 'a3 b2 a4 b2', 'a4 b1 a4 b3^-1']),
    98: (2, 0, ['a1 b3 a1 b3', 'a1 b3^-1 a2 b3^-1', 'a2 b3 a3 b3', 'a3 b1 a3 b1', 'a3 b2 a4 b2', 'a4 b1 a4 b3']),
    99: (2, 0, ['a1 b3 a1 b3', 'a1 b3^-1 a3 b3^-1', 'a2 b3 a2^-1 b3', 'a3 b1 a3 b1', 'a3 b2 a4 b2', 'a4 b1 a4 b3^-1']),
    100: (2, 0, ['a1 b3 a1 b3', 'a1 b3^-1 a3 b3^-1', 'a2 b3 a2^-1 b3', 'a3 b1 a3 b1', 'a3 b2 a4 b2', 'a4 b1 a4 b3']),
    101: (2, 0, ['a1 b3 a1 b3', 'a1 b3^-1 a2^-1 b3^-1', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a3 b1', 'a3 b2 a4 b2', 'a4 b1 a4 b3^-1']),
    102: (2, 0, ['a1 b3 a1 b3', 'a1 b3^-1 a2^-1 b3^-1', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a3 b1', 'a3 b2 a4 b2', 'a4 b1 a4 b3']),
    103: (2, 0, ['a1 b3 a1^-1 b3^-1', 'a2 b3 a2 b3', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a3 b1^-1', 'a3 b2 a4 b2^-1', 'a3 b2^-1 a4 b2', 'a4 b1 a4 b3^-1']),
    104: (2, 0, ['a1 b3 a1^-1 b3^-1', 'a2 b3 a2 b3', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a3 b1^-1', 'a3 b2 a4 b2^-1', 'a3 b2^-1 a4 b2', 'a4 b1 a4 b3']),
    105: (2, 0, ['a1 b3 a1^-1 b3^-1', 'a2 b3 a2 b3', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a3 b1', 'a3 b2 a4 b2', 'a4 b1 a4 b3^-1']),
    106: (2, 0, ['a1 b3 a1^-1 b3^-1', 'a2 b3 a2 b3', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a3 b1', 'a3 b2 a4 b2', 'a4 b1 a4 b3']),
    107: (2, 0, ['a1 b3 a1 b3', 'a1 b3^-1 a2 b3^-1', 'a2 b3 a3 b3', 'a3 b1 a3 b1^-1', 'a3 b2 a4 b2^-1', 'a3 b2^-1 a4 b2', 'a4 b1 a4 b3^-1']),
    108: (2, 0, ['a1 b3 a1 b3', 'a1 b3^-1 a2 b3^-1', 'a2 b3 a3 b3', 'a3 b1 a3 b1^-1', 'a3 b2 a4 b2^-1', 'a3 b2^-1 a4 b2', 'a4 b1 a4 b3']),
    109: (2, 0, ['a1 b3 a1 b3', 'a1 b3^-1 a3 b3^-1', 'a2 b3 a2^-1 b3', 'a3 b1 a3 b1^-1', 'a3 b2 a4 b2^-1', 'a3 b2^-1 a4 b2', 'a4 b1 a4 b3^-1']),
    110: (2, 0, ['a1 b3 a1 b3', 'a1 b3^-1 a3 b3^-1', 'a2 b3 a2^-1 b3', 'a3 b1 a3 b1^-1', 'a3 b2 a4 b2^-1', 'a3 b2^-1 a4 b2', 'a4 b1 a4 b3']),
    111: (2, 0, ['a1 b3 a1 b3', 'a1 b3^-1 a2^-1 b3^-1', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a3 b1^-1', 'a3 b2 a4 b2^-1', 'a3 b2^-1 a4 b2', 'a4 b1 a4 b3^-1']),
    112: (2, 0, ['a1 b3 a1 b3', 'a1 b3^-1 a2^-1 b3^-1', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a3 b1^-1', 'a3 b2 a4 b2^-1', 'a3 b2^-1 a4 b2', 'a4 b1 a4 b3']),
    113: (2, 0, ['a1 b3 a1^-1 b3^-1', 'a2 b3 a2 b3', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a3 b1', 'a3 b2 a4 b2^-1', 'a3 b2^-1 a4 b2', 'a4 b1 a4 b3^-1']),
    114: (2, 0, ['a1 b3 a1^-1 b3^-1', 'a2 b3 a2 b3', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a3 b1', 'a3 b2 a4 b2^-1', 'a3 b2^-1 a4 b2', 'a4 b1 a4 b3']),
    115: (2, 0, ['a1 b3 a1^-1 b3^-1', 'a2 b3 a2 b3', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a3 b1^-1', 'a3 b2 a4 b2', 'a4 b1 a4 b3^-1']),
    116: (2, 0, ['a1 b3 a1^-1 b3^-1', 'a2 b3 a2 b3', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a3 b1^-1', 'a3 b2 a4 b2', 'a4 b1 a4 b3']),
    117: (2, 0, ['a1 b3 a1 b3', 'a1 b3^-1 a3 b3^-1', 'a2 b3 a2^-1 b3', 'a3 b1 a3 b1^-1', 'a3 b2 a4 b2', 'a4 b1 a4 b3^-1']),
    118: (2, 0, ['a1 b3 a1 b3', 'a1 b3^-1 a3 b3^-1', 'a2 b3 a2^-1 b3', 'a3 b1 a3 b1^-1', 'a3 b2 a4 b2', 'a4 b1 a4 b3']),
    119: (2, 0, ['a1 b3 a1 b3', 'a1 b3^-1 a3 b3^-1', 'a2 b3 a2^-1 b3', 'a3 b1 a3 b1', 'a3 b2 a4 b2^-1', 'a3 b2^-1 a4 b2', 'a4 b1 a4 b3^-1']),
    120: (2, 0, ['a1 b3 a1 b3', 'a1 b3^-1 a3 b3^-1', 'a2 b3 a2^-1 b3', 'a3 b1 a3 b1', 'a3 b2 a4 b2^-1', 'a3 b2^-1 a4 b2', 'a4 b1 a4 b3']),
    121: (2, 0, ['a1 b3 a1 b3', 'a1 b3^-1 a2 b3^-1', 'a2 b3 a3 b3', 'a3 b1 a3 b1', 'a3 b2 a4 b2^-1', 'a3 b2^-1 a4 b2', 'a4 b1 a4 b3^-1']),
    122: (2, 0, ['a1 b3 a1 b3', 'a1 b3^-1 a2 b3^-1', 'a2 b3 a3 b3', 'a3 b1 a3 b1', 'a3 b2 a4 b2^-1', 'a3 b2^-1 a4 b2', 'a4 b1 a4 b3']),
    123: (2, 0, ['a1 b3 a1 b3', 'a1 b3^-1 a2^-1 b3^-1', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a3 b1', 'a3 b2 a4 b2^-1', 'a3 b2^-1 a4 b2', 'a4 b1 a4 b3^-1']),
    124: (2, 0, ['a1 b3 a1 b3', 'a1 b3^-1 a2^-1 b3^-1', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a3 b1', 'a3 b2 a4 b2^-1', 'a3 b2^-1 a4 b2', 'a4 b1 a4 b3']),
    125: (2, 0, ['a1 b3 a1 b3', 'a1 b3^-1 a2 b3^-1', 'a2 b3 a3 b3', 'a3 b1 a3 b1^-1', 'a3 b2 a4 b2', 'a4 b1 a4 b3^-1']),
    126: (2, 0, ['a1 b3 a1 b3', 'a1 b3^-1 a2 b3^-1', 'a2 b3 a3 b3', 'a3 b1 a3 b1^-1', 'a3 b2 a4 b2', 'a4 b1 a4 b3']),
    127: (2, 0, ['a1 b3 a1 b3', 'a1 b3^-1 a2^-1 b3^-1', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a3 b1^-1', 'a3 b2 a4 b2', 'a4 b1 a4 b3^-1']),
    128: (2, 0, ['a1 b3 a1 b3', 'a1 b3^-1 a2^-1 b3^-1', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a3 b1^-1', 'a3 b2 a4 b2', 'a4 b1 a4 b3']),
    129: (2, 0, ['a1 b3 a1 b3', 'a1 b3^-1 a1 b3^-1', 'a2 b3 a2 b3', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a4 b1', 'a3 b2 a3 b2', 'a4 b2 a4 b3^-1']),
    130: (2, 0, ['a1 b3 a1 b3^-1', 'a2 b3 a2 b3', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a4 b1^-1', 'a3 b2 a3 b2^-1', 'a3 b1^-1 a4 b1', 'a4 b2 a4 b3^-1']),
    131: (2, 0, ['a1 b3 a1 b3^-1', 'a2 b3 a2 b3', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a4 b1', 'a3 b2 a3 b2', 'a4 b2 a4 b3^-1']),
    132: (2, 0, ['a1 b3 a1 b3', 'a1 b3^-1 a1 b3^-1', 'a2 b3 a2 b3', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a4 b1^-1', 'a3 b2 a3 b2^-1', 'a3 b1^-1 a4 b1', 'a4 b2 a4 b3^-1']),
    133: (2, 0, ['a1 b3 a1 b3^-1', 'a2 b3 a2 b3', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a4 b1^-1', 'a3 b2 a3 b2', 'a3 b1^-1 a4 b1', 'a4 b2 a4 b3^-1']),
    134: (2, 0, ['a1 b3 a1 b3^-1', 'a2 b3 a2 b3', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a4 b1', 'a3 b2 a3 b2^-1', 'a4 b2 a4 b3^-1']),
    135: (2, 0, ['a1 b3 a1 b3', 'a1 b3^-1 a1 b3^-1', 'a2 b3 a2 b3', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a4 b1^-1', 'a3 b2 a3 b2', 'a3 b1^-1 a4 b1', 'a4 b2 a4 b3^-1']),
    136: (2, 0, ['a1 b3 a1 b3', 'a1 b3^-1 a1 b3^-1', 'a2 b3 a2 b3', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a4 b1', 'a3 b2 a3 b2^-1', 'a4 b2 a4 b3^-1']),
    137: (2, 0, ['a1 b3 a1 b3', 'a1 b3^-1 a1 b3^-1', 'a2 b3 a2 b3', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a3 b1', 'a3 b2 a4 b2', 'a4 b1 a4 b3^-1']),
    138: (2, 0, ['a1 b3 a1 b3', 'a1 b3^-1 a1 b3^-1', 'a2 b3 a2 b3', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a3 b1', 'a3 b2 a4 b2', 'a4 b1 a4 b3']),
    139: (2, 0, ['a1 b3 a1 b3', 'a1 b3^-1 a3 b3^-1', 'a2 b3 a2^-1 b3', 'a3 b1 a4 b1', 'a3 b2 a3 b2', 'a4 b2 a4 b3^-1']),
    140: (2, 0, ['a1 b3 a1 b3^-1', 'a2 b3 a2 b3', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a3 b1^-1', 'a3 b2 a4 b2^-1', 'a3 b2^-1 a4 b2', 'a4 b1 a4 b3^-1']),
    141: (2, 0, ['a1 b3 a1 b3^-1', 'a2 b3 a2 b3', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a3 b1^-1', 'a3 b2 a4 b2^-1', 'a3 b2^-1 a4 b2', 'a4 b1 a4 b3']),
    142: (2, 0, ['a1 b3 a1 b3^-1', 'a2 b3 a2 b3', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a3 b1', 'a3 b2 a4 b2', 'a4 b1 a4 b3^-1']),
    143: (2, 0, ['a1 b3 a1 b3^-1', 'a2 b3 a2 b3', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a3 b1', 'a3 b2 a4 b2', 'a4 b1 a4 b3']),
    144: (2, 0, ['a1 b3 a1^-1 b3^-1', 'a2 b3 a2 b3', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a4 b1^-1', 'a3 b2 a3 b2^-1', 'a3 b1^-1 a4 b1', 'a4 b2 a4 b3^-1']),
    145: (2, 0, ['a1 b3 a1^-1 b3^-1', 'a2 b3 a2 b3', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a4 b1', 'a3 b2 a3 b2', 'a4 b2 a4 b3^-1']),
    146: (2, 0, ['a1 b3 a1 b3', 'a1 b3^-1 a1 b3^-1', 'a2 b3 a2 b3', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a3 b1^-1', 'a3 b2 a4 b2^-1', 'a3 b2^-1 a4 b2', 'a4 b1 a4 b3^-1']),
    147: (2, 0, ['a1 b3 a1 b3', 'a1 b3^-1 a1 b3^-1', 'a2 b3 a2 b3', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a3 b1^-1', 'a3 b2 a4 b2^-1', 'a3 b2^-1 a4 b2', 'a4 b1 a4 b3']),
    148: (2, 0, ['a1 b3 a1 b3', 'a1 b3^-1 a3 b3^-1', 'a2 b3 a2^-1 b3', 'a3 b1 a4 b1^-1', 'a3 b2 a3 b2^-1', 'a3 b1^-1 a4 b1', 'a4 b2 a4 b3^-1']),
    149: (2, 0, ['a1 b3 a1 b3^-1', 'a2 b3 a2 b3', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a3 b1', 'a3 b2 a4 b2^-1', 'a3 b2^-1 a4 b2', 'a4 b1 a4 b3^-1']),
    150: (2, 0, ['a1 b3 a1 b3^-1', 'a2 b3 a2 b3', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a3 b1', 'a3 b2 a4 b2^-1', 'a3 b2^-1 a4 b2', 'a4 b1 a4 b3']),
    151: (2, 0, ['a1 b3 a1^-1 b3^-1', 'a2 b3 a2 b3', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a4 b1^-1', 'a3 b2 a3 b2', 'a3 b1^-1 a4 b1', 'a4 b2 a4 b3^-1']),
    152: (2, 0, ['a1 b3 a1 b3^-1', 'a2 b3 a2 b3', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a3 b1^-1', 'a3 b2 a4 b2', 'a4 b1 a4 b3^-1']),
    153: (2, 0, ['a1 b3 a1 b3^-1', 'a2 b3 a2 b3', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a3 b1^-1', 'a3 b2 a4 b2', 'a4 b1 a4 b3']),
    154: (2, 0, ['a1 b3 a1^-1 b3^-1', 'a2 b3 a2 b3', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a4 b1', 'a3 b2 a3 b2^-1', 'a4 b2 a4 b3^-1']),
    155: (2, 0, ['a1 b3 a1 b3', 'a1 b3^-1 a1 b3^-1', 'a2 b3 a2 b3', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a3 b1^-1', 'a3 b2 a4 b2', 'a4 b1 a4 b3^-1']),
    156: (2, 0, ['a1 b3 a1 b3', 'a1 b3^-1 a1 b3^-1', 'a2 b3 a2 b3', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a3 b1^-1', 'a3 b2 a4 b2', 'a4 b1 a4 b3']),
    157: (2, 0, ['a1 b3 a1 b3', 'a1 b3^-1 a1 b3^-1', 'a2 b3 a2 b3', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a3 b1', 'a3 b2 a4 b2^-1', 'a3 b2^-1 a4 b2', 'a4 b1 a4 b3^-1']),
    158: (2, 0, ['a1 b3 a1 b3', 'a1 b3^-1 a1 b3^-1', 'a2 b3 a2 b3', 'a2 b3^-1 a3 b3^-1', 'a3 b1 a3 b1', 'a3 b2 a4 b2^-1', 'a3 b2^-1 a4 b2', 'a4 b1 a4 b3']),
    159: (2, 0, ['a1 b3 a1 b3', 'a1 b3^-1 a3 b3^-1', 'a2 b3 a2^-1 b3', 'a3 b1 a4 b1^-1', 'a3 b2 a3 b2', 'a3 b1^-1 a4 b1', 'a4 b2 a4 b3^-1']),
    160: (2, 0, ['a1 b3 a1 b3', 'a1 b3^-1 a3 b3^-1', 'a2 b3 a2^-1 b3', 'a3 b1 a4 b1', 'a3 b2 a3 b2^-1', 'a4 b2 a4 b3^-1']),
}

# Full square lists for the four-by-five virtually simple family.
GAMMA45_EXTRA = {
    1: ['a1 b4 a1 b4', 'a1 b5 a1 b5', 'a2 b4 a2 b5', 'a3 b4 a3 b4', 'a3 b5 a4 b5', 'a4 b1 a4 b2', 'a4 b3 a4 b4'],
    2: ['a1 b4 a1 b4', 'a1 b5 a1 b5', 'a2 b4 a2 b5', 'a3 b4 a3 b4', 'a3 b5 a4 b5', 'a4 b1 a4 b4', 'a4 b2 a4 b3'],
    3: ['a1 b4 a1 b4', 'a1 b5 a3 b5', 'a2 b4 a2 b5', 'a3 b4 a4 b4', 'a4 b1 a4 b2', 'a4 b3 a4 b5'],
    4: ['a1 b4 a1 b4', 'a1 b5 a3 b5', 'a2 b4 a2 b5', 'a3 b4 a4 b4', 'a4 b1 a4 b5', 'a4 b2 a4 b3'],
    5: ['a1 b4 a1 b4', 'a1 b5 a4 b5', 'a2 b4 a2 b5', 'a3 b4 a3 b4', 'a3 b5 a3 b5', 'a4 b1 a4 b2', 'a4 b3 a4 b4'],
    6: ['a1 b4 a1 b4', 'a1 b5 a4 b5', 'a2 b4 a2 b5', 'a3 b4 a3 b4', 'a3 b5 a3 b5', 'a4 b1 a4 b4', 'a4 b2 a4 b3'],
    7: ['a1 b4 a1 b4', 'a1 b5 a4 b5', 'a2 b4 a2 b5', 'a3 b4 a3 b5', 'a4 b1 a4 b2', 'a4 b3 a4 b4'],
    8: ['a1 b4 a1 b4', 'a1 b5 a4 b5', 'a2 b4 a2 b5', 'a3 b4 a3 b5', 'a4 b1 a4 b4', 'a4 b2 a4 b3'],
    9: ['a1 b4 a1 b4', 'a1 b5 a4 b5', 'a2 b4 a3 b5', 'a4 b1 a4 b2', 'a4 b3 a4 b4'],
    10: ['a1 b4 a1 b4', 'a1 b5 a4 b5', 'a2 b4 a3 b5', 'a4 b1 a4 b4', 'a4 b2 a4 b3'],
    11: ['a1 b4 a3 b4', 'a1 b5 a4 b5', 'a2 b4 a2 b5', 'a3 b5 a3 b5', 'a4 b1 a4 b2', 'a4 b3 a4 b4'],
    12: ['a1 b4 a3 b4', 'a1 b5 a4 b5', 'a2 b4 a2 b5', 'a3 b5 a3 b5', 'a4 b1 a4 b4', 'a4 b2 a4 b3'],
    13: ['a1 b4 a1 b5', 'a2 b4 a2 b4', 'a2 b5 a2 b5', 'a3 b4 a3 b4', 'a3 b5 a4 b5', 'a4 b1 a4 b2', 'a4 b3 a4 b4'],
    14: ['a1 b4 a1 b5', 'a2 b4 a2 b4', 'a2 b5 a2 b5', 'a3 b4 a3 b4', 'a3 b5 a4 b5', 'a4 b1 a4 b4', 'a4 b2 a4 b3'],
    15: ['a1 b4 a1 b5', 'a2 b4 a2 b4', 'a2 b5 a3 b5', 'a3 b4 a4 b4', 'a4 b1 a4 b2', 'a4 b3 a4 b5'],
    16: ['a1 b4 a1 b5', 'a2 b4 a2 b4', 'a2 b5 a3 b5', 'a3 b4 a4 b4', 'a4 b1 a4 b5', 'a4 b2 a4 b3'],
    17: ['a1 b4 a1 b5', 'a2 b4 a2 b4', 'a2 b5 a4 b5', 'a3 b4 a3 b4', 'a3 b5 a3 b5', 'a4 b1 a4 b2', 'a4 b3 a4 b4'],
    18: ['a1 b4 a1 b5', 'a2 b4 a2 b4', 'a2 b5 a4 b5', 'a3 b4 a3 b4', 'a3 b5 a3 b5', 'a4 b1 a4 b4', 'a4 b2 a4 b3'],
    19: ['a1 b4 a1 b5', 'a2 b4 a2 b4', 'a2 b5 a4 b5', 'a3 b4 a3 b5', 'a4 b1 a4 b2', 'a4 b3 a4 b4'],
    20: ['a1 b4 a1 b5', 'a2 b4 a2 b4', 'a2 b5 a4 b5', 'a3 b4 a3 b5', 'a4 b1 a4 b4', 'a4 b2 a4 b3'],
    21: ['a1 b4 a1 b5', 'a2 b4 a3 b4', 'a2 b5 a4 b5', 'a3 b5 a3 b5', 'a4 b1 a4 b2', 'a4 b3 a4 b4'],
    22: ['a1 b4 a1 b5', 'a2 b4 a3 b4', 'a2 b5 a4 b5', 'a3 b5 a3 b5', 'a4 b1 a4 b4', 'a4 b2 a4 b3'],
    23: ['a1 b4 a1 b5', 'a2 b4 a2 b5', 'a3 b4 a3 b4', 'a3 b5 a4 b5', 'a4 b1 a4 b2', 'a4 b3 a4 b4'],
    24: ['a1 b4 a1 b5', 'a2 b4 a2 b5', 'a3 b4 a3 b4', 'a3 b5 a4 b5', 'a4 b1 a4 b4', 'a4 b2 a4 b3'],
    25: ['a1 b4 a2 b5', 'a3 b4 a3 b4', 'a3 b5 a4 b5', 'a4 b1 a4 b2', 'a4 b3 a4 b4'],
    26: ['a1 b4 a2 b5', 'a3 b4 a3 b4', 'a3 b5 a4 b5', 'a4 b1 a4 b4', 'a4 b2 a4 b3'],
    27: ['a1 b4 a3 b5', 'a2 b4 a2 b4', 'a2 b5 a4 b5', 'a4 b1 a4 b2', 'a4 b3 a4 b4'],
    28: ['a1 b4 a3 b5', 'a2 b4 a2 b4', 'a2 b5 a4 b5', 'a4 b1 a4 b4', 'a4 b2 a4 b3'],
    29: ['a1 b4 a1 b4', 'a1 b5 a2 b5', 'a2 b4 a4 b4', 'a3 b4 a3 b5', 'a4 b1 a4 b1', 'a4 b2 a4 b2', 'a4 b3 a4 b5'],
    30: ['a1 b4 a1 b4', 'a1 b5 a2 b5', 'a2 b4 a4 b4', 'a3 b4 a3 b5', 'a4 b1 a4 b1', 'a4 b2 a4 b5', 'a4 b3 a4 b3'],
    31: ['a1 b4 a1 b4', 'a1 b5 a2 b5', 'a2 b4 a4 b4', 'a3 b4 a3 b5', 'a4 b1 a4 b2', 'a4 b3 a4 b5'],
    32: ['a1 b4 a1 b4', 'a1 b5 a2 b5', 'a2 b4 a4 b4', 'a3 b4 a3 b5', 'a4 b1 a4 b3', 'a4 b2 a4 b5'],
    33: ['a1 b4 a1 b4', 'a1 b5 a4 b5', 'a2 b4 a3 b5', 'a4 b1 a4 b1', 'a4 b2 a4 b2', 'a4 b3 a4 b4'],
    34: ['a1 b4 a1 b4', 'a1 b5 a4 b5', 'a2 b4 a3 b5', 'a4 b1 a4 b1', 'a4 b2 a4 b4', 'a4 b3 a4 b3'],
    35: ['a1 b4 a1 b4', 'a1 b5 a4 b5', 'a2 b4 a3 b5', 'a4 b1 a4 b2', 'a4 b3 a4 b4'],
    36: ['a1 b4 a1 b4', 'a1 b5 a4 b5', 'a2 b4 a3 b5', 'a4 b1 a4 b3', 'a4 b2 a4 b4'],
    37: ['a1 b4 a1 b4', 'a1 b5 a4 b5', 'a2 b4 a3 b5', 'a4 b1 a4 b4', 'a4 b2 a4 b2', 'a4 b3 a4 b3'],
    38: ['a1 b4 a1 b4', 'a1 b5 a4 b5', 'a2 b4 a3 b5', 'a4 b1 a4 b4', 'a4 b2 a4 b3'],
    39: ['a1 b4 a2 b4', 'a1 b5 a4 b5', 'a2 b5 a2 b5', 'a3 b4 a3 b5', 'a4 b1 a4 b1', 'a4 b2 a4 b2', 'a4 b3 a4 b4'],
    40: ['a1 b4 a2 b4', 'a1 b5 a4 b5', 'a2 b5 a2 b5', 'a3 b4 a3 b5', 'a4 b1 a4 b1', 'a4 b2 a4 b4', 'a4 b3 a4 b3'],
    41: ['a1 b4 a2 b4', 'a1 b5 a4 b5', 'a2 b5 a2 b5', 'a3 b4 a3 b5', 'a4 b1 a4 b2', 'a4 b3 a4 b4'],
    42: ['a1 b4 a2 b4', 'a1 b5 a4 b5', 'a2 b5 a2 b5', 'a3 b4 a3 b5', 'a4 b1 a4 b3', 'a4 b2 a4 b4'],
    43: ['a1 b4 a1 b5', 'a2 b4 a2 b4', 'a2 b5 a3 b5', 'a3 b4 a4 b4', 'a4 b1 a4 b1', 'a4 b2 a4 b2', 'a4 b3 a4 b5'],
    44: ['a1 b4 a1 b5', 'a2 b4 a2 b4', 'a2 b5 a3 b5', 'a3 b4 a4 b4', 'a4 b1 a4 b1', 'a4 b2 a4 b5', 'a4 b3 a4 b3'],
    45: ['a1 b4 a1 b5', 'a2 b4 a2 b4', 'a2 b5 a3 b5', 'a3 b4 a4 b4', 'a4 b1 a4 b2', 'a4 b3 a4 b5'],
    46: ['a1 b4 a1 b5', 'a2 b4 a2 b4', 'a2 b5 a3 b5', 'a3 b4 a4 b4', 'a4 b1 a4 b3', 'a4 b2 a4 b5'],
    47: ['a1 b4 a1 b5', 'a2 b4 a2 b4', 'a2 b5 a3 b5', 'a3 b4 a4 b4', 'a4 b1 a4 b5', 'a4 b2 a4 b2', 'a4 b3 a4 b3'],
    48: ['a1 b4 a1 b5', 'a2 b4 a2 b4', 'a2 b5 a3 b5', 'a3 b4 a4 b4', 'a4 b1 a4 b5', 'a4 b2 a4 b3'],
    49: ['a1 b4 a1 b5', 'a2 b4 a3 b4', 'a2 b5 a4 b5', 'a3 b5 a3 b5', 'a4 b1 a4 b1', 'a4 b2 a4 b2', 'a4 b3 a4 b4'],
    50: ['a1 b4 a1 b5', 'a2 b4 a3 b4', 'a2 b5 a4 b5', 'a3 b5 a3 b5', 'a4 b1 a4 b1', 'a4 b2 a4 b4', 'a4 b3 a4 b3'],
    51: ['a1 b4 a1 b5', 'a2 b4 a3 b4', 'a2 b5 a4 b5', 'a3 b5 a3 b5', 'a4 b1 a4 b2', 'a4 b3 a4 b4'],
    52: ['a1 b4 a1 b5', 'a2 b4 a3 b4', 'a2 b5 a4 b5', 'a3 b5 a3 b5', 'a4 b1 a4 b3', 'a4 b2 a4 b4'],
    53: ['a1 b4 a1 b5', 'a2 b4 a3 b4', 'a2 b5 a4 b5', 'a3 b5 a3 b5', 'a4 b1 a4 b4', 'a4 b2 a4 b2', 'a4 b3 a4 b3'],
    54: ['a1 b4 a1 b5', 'a2 b4 a3 b4', 'a2 b5 a4 b5', 'a3 b5 a3 b5', 'a4 b1 a4 b4', 'a4 b2 a4 b3'],
    55: ['a1 b4 a2 b5', 'a3 b4 a3 b4', 'a3 b5 a4 b5', 'a4 b1 a4 b1', 'a4 b2 a4 b2', 'a4 b3 a4 b4'],
    56: ['a1 b4 a2 b5', 'a3 b4 a3 b4', 'a3 b5 a4 b5', 'a4 b1 a4 b1', 'a4 b2 a4 b4', 'a4 b3 a4 b3'],
    57: ['a1 b4 a2 b5', 'a3 b4 a3 b4', 'a3 b5 a4 b5', 'a4 b1 a4 b2', 'a4 b3 a4 b4'],
    58: ['a1 b4 a2 b5', 'a3 b4 a3 b4', 'a3 b5 a4 b5', 'a4 b1 a4 b3', 'a4 b2 a4 b4'],
    59: ['a1 b4 a2 b5', 'a3 b4 a3 b4', 'a3 b5 a4 b5', 'a4 b1 a4 b4', 'a4 b2 a4 b2', 'a4 b3 a4 b3'],
    60: ['a1 b4 a2 b5', 'a3 b4 a3 b4', 'a3 b5 a4 b5', 'a4 b1 a4 b4', 'a4 b2 a4 b3'],
}

# Conjugacy classes of subgroups of Sym(6): label -> generators (cycles on 1..6).
SYM6_CLASSES = [
    ('720.1', [[(1, 2, 4, 5), (3, 6)], [(2, 4)], [(1, 2), (3, 4)]]),
    ('360.1', [[(1, 2), (3, 4)], [(1, 2, 4, 5), (3, 6)]]),
    ('120.2', [[(1, 3, 2, 4)], [(1, 6, 5, 2, 4)]]),
    ('120.1', [[(2, 5)], [(1, 2), (3, 4, 5)]]),
    ('72.1', [[(2, 3), (4, 6, 5)], [(1, 4), (2, 6, 3, 5)]]),
    ('60.2', [[(1, 2), (3, 4)], [(1, 3, 4), (2, 5, 6)]]),
    ('60.1', [[(1, 2), (3, 4)], [(2, 3, 5)]]),
    ('48.2', [[(1, 2), (3, 6), (4, 5)], [(1, 3, 4, 2, 5, 6)]]),
    ('48.1', [[(1, 2), (3, 6, 5)], [(1, 2), (3, 6, 4, 5)]]),
    ('36.3', [[(1, 3), (5, 6)], [(1, 5, 2, 6), (3, 4)]]),
    ('36.2', [[(2, 3), (5, 6)], [(1, 3, 2), (4, 6)]]),
    ('36.1', [[(1, 3), (4, 6)], [(1, 6, 3, 5, 2, 4)]]),
    ('24.6', [[(4, 5, 6)], [(1, 2), (3, 4, 6, 5)]]),
    ('24.5', [[(1, 3, 6), (2, 5, 4)], [(1, 2), (3, 4, 5, 6)]]),
    ('24.4', [[(1, 4, 2)], [(1, 2)], [(3, 4)]]),
    ('24.3', [[(1, 4, 2, 3)], [(1, 6, 2, 5)]]),
    ('24.2', [[(1, 5, 4, 2, 6, 3)], [(1, 5, 4), (2, 6, 3)]]),
    ('24.1', [[(3, 6, 4)], [(1, 2), (3, 6, 5)]]),
    ('20.1', [[(2, 4, 5, 3)], [(1, 5), (2, 4)]]),
    ('18.3', [[(5, 6)], [(1, 2, 3), (4, 5)]]),
    ('18.2', [[(1, 4, 2, 5, 3, 6)], [(1, 3, 2), (4, 5, 6)]]),
    ('18.1', [[(1, 2, 3)], [(1, 3), (5, 6)], [(4, 5, 6)]]),
    ('16.1', [[(5, 6)], [(3, 6), (4, 5)], [(1, 2), (3, 4)]]),
    ('12.4', [[(1, 2), (3, 4)], [(1, 2), (3, 5, 4)]]),
    ('12.3', [[(1, 3), (4, 6)], [(1, 4), (2, 6), (3, 5)]]),
    ('12.2', [[(1, 5, 3), (2, 6, 4)], [(1, 2), (3, 4)]]),
    ('12.1', [[(1, 4, 2)], [(1, 2), (3, 4)]]),
    ('10.1', [[(1, 5), (2, 4)], [(1, 3), (4, 5)]]),
    ('9.1', [[(1, 2, 3)], [(4, 5, 6)]]),
    ('8.7', [[(3, 6), (4, 5)], [(1, 2), (3, 4)]]),
    ('8.6', [[(1, 2)], [(3, 4, 5, 6)]]),
    ('8.5', [[(1, 2)], [(1, 4, 2, 3)]]),
    ('8.4', [[(1, 2), (3, 4, 5, 6)], [(4, 6)]]),
    ('8.3', [[(3, 5, 4, 6)], [(1, 2), (3, 4)]]),
    ('8.2', [[(3, 4), (5, 6)], [(3, 6), (4, 5)], [(1, 2)]]),
    ('8.1', [[(1, 2)], [(3, 4)], [(5, 6)]]),
    ('6.6', [[(1, 3), (4, 6)], [(1, 2, 3), (4, 5, 6)]]),
    ('6.5', [[(1, 2)], [(3, 4, 5)]]),
    ('6.4', [[(3, 4, 5)], [(1, 2), (3, 4)]]),
    ('6.3', [[(1, 4, 3, 6, 2, 5)]]),
    ('6.2', [[(1, 2, 3)], [(2, 3)]]),
    ('6.1', [[(1, 2, 3), (4, 5, 6)], [(1, 6), (2, 5), (3, 4)]]),
    ('5.1', [[(1, 3, 5, 2, 4)]]),
    ('4.7', [[(1, 2), (3, 4, 5, 6)]]),
    ('4.6', [[(1, 3, 2, 4)]]),
    ('4.5', [[(3, 4)], [(1, 2), (3, 4)]]),
    ('4.4', [[(3, 4), (5, 6)], [(1, 2), (3, 6), (4, 5)]]),
    ('4.3', [[(3, 4), (5, 6)], [(1, 2)]]),
    ('4.2', [[(1, 4), (2, 3)], [(1, 2), (3, 4)]]),
    ('4.1', [[(3, 4), (5, 6)], [(1, 2), (3, 4)]]),
    ('3.2', [[(1, 2, 3), (4, 5, 6)]]),
    ('3.1', [[(1, 2, 3)]]),
    ('2.3', [[(1, 2), (3, 4)]]),
    ('2.2', [[(1, 6), (2, 5), (3, 4)]]),
    ('2.1', [[(1, 2)]]),
    ('1.1', []),
]
