"""
The reference parameter table of the construction with t = 2, rho = (2, 2), b = (1, 1), l = 0.

Each row holds the local lengths, the global extension D_g of the defining set, and the printed
values: the Hartmann-Tzeng distance bound, the dimension and the dimension bound.
"""

ROWS = [
    {'n': 15, 'n1': 3, 'n2': 5, 'dg': [4], 'ht': 5, 'k': 7, 'bound': 7},
    {'n': 15, 'n1': 3, 'n2': 5, 'dg': [4, 7, 8, 11], 'ht': 11, 'k': 4, 'bound': 4},
    {'n': 21, 'n1': 3, 'n2': 7, 'dg': [8], 'ht': 5, 'k': 11, 'bound': 11},
    {'n': 21, 'n1': 3, 'n2': 7, 'dg': [4, 5], 'ht': 6, 'k': 10, 'bound': 11},
    {'n': 21, 'n1': 3, 'n2': 7, 'dg': [8, 10, 11, 13], 'ht': 11, 'k': 8, 'bound': 8},
    {'n': 51, 'n1': 3, 'n2': 17, 'dg': [16], 'ht': 5, 'k': 31, 'bound': 31},
    {'n': 51, 'n1': 3, 'n2': 17, 'dg': [14, 16], 'ht': 6, 'k': 30, 'bound': 31},
    {'n': 51, 'n1': 3, 'n2': 17, 'dg': [10, 11, 13, 14, 16], 'ht': 11, 'k': 27, 'bound': 28},
    {'n': 35, 'n1': 5, 'n2': 7, 'dg': [4], 'ht': 4, 'k': 23, 'bound': 24},
    {'n': 35, 'n1': 5, 'n2': 7, 'dg': [4, 6], 'ht': 5, 'k': 22, 'bound': 23},
    {'n': 35, 'n1': 5, 'n2': 7, 'dg': [8, 9, 11, 12, 13], 'ht': 10, 'k': 19, 'bound': 20},
]

RHO = (2, 2)
