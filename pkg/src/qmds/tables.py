"""Bundled reference tables of claimed code parameters.

These are the worked-example tables that ship with the package, transcribed
verbatim so that ``qmds.audit`` can recompute every entry from scratch and
report agreement or disagreement.  Nothing in here is interpreted: each row
records exactly the printed numbers (including any that turn out to be
inconsistent), plus the construction route the table is attached to.

Row key conventions
  code      printed quantum triple [[n, k, d]] (None where printed as a
            formula in the table header rather than numbers)
  sub       printed subscript of the triple (the claimed alphabet size q)
  n         printed length when the triple is symbolic
  n_factors printed factorization of the length, where the source shows one
"""

from __future__ import annotations

# Table 1 - extended subgroup codes (construction c1_ext).
# Columns: printed triple, subscript, q, m, printed dimension k.
TABLE1 = (
    {"row": 1, "code": (33, 15, 10), "sub": 17, "q": 17, "m": 9, "k": 9},
    {"row": 2, "code": (73, 51, 12), "sub": 19, "q": 19, "m": 5, "k": 11},
    {"row": 3, "code": (57, 27, 16), "sub": 29, "q": 29, "m": 15, "k": 15},
    {"row": 4, "code": (73, 35, 20), "sub": 37, "q": 37, "m": 19, "k": 19},
    {"row": 5, "code": (81, 41, 21), "sub": 41, "q": 41, "m": 21, "k": 20},
    {"row": 6, "code": (169, 125, 23), "sub": 43, "q": 43, "m": 11, "k": 22},
    {"row": 7, "code": (105, 53, 27), "sub": 53, "q": 53, "m": 27, "k": 26},
)

# Table 2 - parity-filtered unions in characteristic two (char2_union).
# Columns: printed triple, subscript, h (q = 2^h), m1, m2, printed k.
TABLE2 = (
    {"row": 1, "code": (372, 340, 17), "sub": 32, "h": 5, "m1": 3, "m2": 11,
     "k": 16},
    {"row": 2, "code": (1008, 942, 34), "sub": 64, "h": 6, "m1": 5, "m2": 13,
     "k": 32, "body_text_code": (1008, 942, 33)},
    {"row": 3, "code": (5588, 5460, 65), "sub": 128, "h": 7, "m1": 3,
     "m2": 43, "k": 64},
    {"row": 4, "code": (22484, 21956, 265), "sub": 512, "h": 9, "m1": 19,
     "m2": 27, "k": 264},
)

# Table 3 - full unions of two odd subgroups, odd q (odd_union).
# Columns: printed length, subscript/q, m1, m2, printed dimension range max.
TABLE3 = (
    {"row": 1, "n": 412, "sub": 29, "q": 29, "m1": 3, "m2": 5, "k_max": 16},
    {"row": 2, "n": 720, "sub": 41, "q": 41, "m1": 3, "m2": 7, "k_max": 22},
    {"row": 3, "n": 1624, "sub": 59, "q": 59, "m1": 3, "m2": 5, "k_max": 34},
    {"row": 4, "n": 2952, "sub": 83, "q": 83, "m1": 3, "m2": 7, "k_max": 46},
)

# Table 4 - unions of two even subgroups with q = 2ab + 1 (half_power_union,
# divisors (2a, 2b)).  Columns: printed length, subscript, q, a, b, d bound.
TABLE4 = (
    {"row": 1, "n": 224, "sub": 29, "q": 31, "a": 3, "b": 5, "d_max": 17},
    {"row": 2, "n": 396, "sub": 41, "q": 43, "a": 3, "b": 7, "d_max": 25},
    {"row": 3, "n": 884, "sub": 67, "q": 67, "a": 3, "b": 11, "d_max": 37},
    {"row": 4, "n": 792, "sub": 71, "q": 71, "a": 5, "b": 7, "d_max": 41},
    {"row": 5, "n": 1196, "sub": 91, "q": 91, "a": 5, "b": 9, "d_max": 51},
)

# Table 5 - unions of three even subgroups, q = 2abc + 1 (half_power_union,
# divisors (2a, 2b, 2c)).
TABLE5 = (
    {"row": 1, "n": 12084, "sub": 211, "q": 211, "a": 3, "b": 5, "c": 7,
     "d_max": 121},
    {"row": 2, "n": 28552, "sub": 331, "q": 331, "a": 3, "b": 5, "c": 11,
     "d_max": 181},
    {"row": 3, "n": 77736, "sub": 631, "q": 631, "a": 5, "b": 7, "c": 9,
     "d_max": 351},
    {"row": 4, "n": 80652, "sub": 571, "q": 571, "a": 3, "b": 5, "c": 19,
     "d_max": 301},
)

# Table 6 - mixed unions with the adjacent pair (m, m - 1) (mixed_union).
TABLE6 = (
    {"row": 1, "n": 48, "sub": 13, "q": 13, "m": 7, "d_max": 7},
    {"row": 2, "n": 48, "sub": 25, "q": 17, "m": 9, "d_max": 9},
    {"row": 3, "n": 56, "sub": 29, "q": 29, "m": 15, "d_max": 15},
    {"row": 4, "n": 144, "sub": 41, "q": 37, "m": 19, "d_max": 19},
    {"row": 5, "n": 192, "sub": 49, "q": 49, "m": 25, "d_max": 25},
    {"row": 6, "n": 960, "sub": 49, "q": 49, "m": 5, "d_max": 29},
    {"row": 7, "n": 288, "sub": 73, "q": 73, "m": 37, "d_max": 37},
    {"row": 8, "n": 1760, "sub": 89, "q": 89, "m": 9, "d_max": 49},
)

# Table 7 - mixed unions with the pair (4kk + 1, 2(2kk + 1)) at square q
# (mixed_union); the printed length is shown in factored form.
TABLE7 = (
    {"row": 1, "n_factors": (56, 170), "sub": 169, "q": 169, "kk": 1,
     "d_max": 101},
    {"row": 2, "n_factors": (96, 290), "sub": 289, "q": 289, "kk": 1,
     "d_max": 173},
    {"row": 3, "n_factors": (456, 1370), "sub": 1369, "q": 1369, "kk": 1,
     "d_max": 821},
    {"row": 4, "n_factors": (616, 1850), "sub": 1849, "q": 1849, "kk": 1,
     "d_max": 1109},
    {"row": 5, "n_factors": (984, 6870), "sub": 6889, "q": 6889, "kk": 3,
     "d_max": 3709},
    {"row": 6, "n_factors": (672, 57122), "sub": 57121, "q": 57121, "kk": 42,
     "d_max": 28729},
    {"row": 7, "n_factors": (1896, 24650), "sub": 24649, "q": 24649, "kk": 6,
     "d_max": 12817},
)

# Table 8 - mixed unions from searched even/odd pairs (mixed_union with
# m1 = m_odd, m2 = m_even); lengths printed in factored form.
TABLE8 = (
    {"row": 1, "n_factors": (1088, 1995), "sub": 11969, "q": 11969,
     "m_even": 176, "m_odd": 105, "d_max": 6041},
    {"row": 2, "n_factors": (2768, 5075), "sub": 30449, "q": 30449,
     "m_even": 176, "m_odd": 105, "d_max": 15369},
    {"row": 3, "n_factors": (7758, 9310), "sub": 46549, "q": 46549,
     "m_even": 36, "m_odd": 175, "d_max": 23407},
    {"row": 4, "n_factors": (9858, 11830), "sub": 59149, "q": 59149,
     "m_even": 36, "m_odd": 175, "d_max": 29743},
)

# Table 9 - the summary table of length/distance families.  ``family`` keys
# are consumed by the audit crosscheck; rows marked external cite earlier
# literature and are recorded but not recomputed.
TABLE9 = (
    {"row": 1, "family": "subgroup_odd", "external": True,
     "claimed": "d <= (q-1)/2 + (q-1)/(2m)"},
    {"row": 2, "family": "subgroup_even", "external": True,
     "claimed": "d <= (q-1)/2 + (q-1)/(2m) + 1"},
    {"row": 3, "family": "half_power", "external": True,
     "claimed": "d <= (q+1)/2 + (q-1)/m"},
    {"row": 4, "family": "subgroup_odd_extended", "external": False,
     "claimed": "d <= (q+1)/2 + (q-1)/(2m)"},
    {"row": 5, "family": "half_split", "external": False,
     "claimed": "d = (q+1)/2"},
    {"row": 6, "family": "adjacent_pair", "external": False,
     "claimed": "d <= (q-1)/2 + (q+1)/(2m)"},
    {"row": 7, "family": "quarter_split", "external": False,
     "claimed": "d <= (q-1)/2 + (q+1)/(2(4kk+1))"},
    {"row": 8, "family": "even_pair_doubling", "external": False,
     "claimed": "d <= (q+1)/2 + a"},
    {"row": 9, "family": "even_pair_doubling_generic", "external": False,
     "claimed": "d <= (q+1)/2 + (q-1)/(2b)"},
    {"row": 10, "family": "even_triple_doubling", "external": False,
     "claimed": "d <= (q+1)/2 + a*b"},
    {"row": 11, "family": "searched_pair", "external": False,
     "claimed": "d <= (q-1)/2 + min((q+1)/(2*m_odd), (q-1)/m_even + 1)"},
    {"row": 12, "family": "quadratic_family", "external": False,
     "claimed": "d <= (q+1)/2 + (2k-1)/3"},
)

ALL_TABLES = {1: TABLE1, 2: TABLE2, 3: TABLE3, 4: TABLE4, 5: TABLE5,
              6: TABLE6, 7: TABLE7, 8: TABLE8, 9: TABLE9}
