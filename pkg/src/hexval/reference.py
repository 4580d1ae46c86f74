"""Expected regression values for the two order-2 generalized hexagons.

Every constant here is a published or independently derived invariant of
H(2), H^D(2) or their valuation geometries. The report machinery compares
freshly computed results against these tables cell by cell.
"""
from __future__ import annotations

from typing import Dict, List, Tuple

# (label, class size, M_f, |O_f|, |H_f|, value distribution)
ValuationRow = Tuple[str, int, int, int, int, Tuple[int, int, int, int]]

AUT_ORDER = 12096

DISTANCE_DISTRIBUTION = [1, 6, 24, 32]

HEXAGON_ORDER = (2, 2)

#: valuation classes of H^D(2)
VALUATION_TABLE_H2DUAL: List[ValuationRow] = [
    ("A", 63, 3, 1, 31, (1, 6, 24, 32)),
    ("B", 252, 3, 1, 47, (1, 14, 32, 16)),
    ("C", 252, 2, 1, 23, (1, 22, 40, 0)),
    ("D", 1008, 2, 5, 31, (5, 26, 32, 0)),
]

#: valuation classes of H(2)
VALUATION_TABLE_H2: List[ValuationRow] = [
    ("A", 63, 3, 1, 31, (1, 6, 24, 32)),
    ("B1", 126, 2, 1, 23, (1, 22, 40, 0)),
    ("B2", 252, 2, 3, 27, (3, 24, 36, 0)),
    ("B3", 504, 2, 4, 29, (4, 25, 34, 0)),
    ("B4", 72, 2, 7, 35, (7, 28, 28, 0)),
    ("B5", 378, 2, 9, 39, (9, 30, 24, 0)),
    ("C", 36, 1, 21, 21, (21, 42, 0, 0)),
]

#: lines of the valuation geometry of H^D(2):
#: line type -> {point type -> lines of that type through each such point}
LINE_TABLE_H2DUAL: Dict[str, Dict[str, int]] = {
    "AAA": {"A": 3},
    "ABB": {"A": 2, "B": 1},
    "ACC": {"A": 2, "C": 1},
    "ADD": {"A": 24, "D": 3},
    "BBB": {"B": 4},
    "BCC": {"B": 1, "C": 2},
    "BDD": {"B": 4, "D": 2},
    "CCC": {"C": 8},
    "CCD": {"C": 40, "D": 5},
    "CDD": {"C": 4, "D": 2},
    "DDD": {"D": 10},
}

#: lines of the valuation geometry of H(2)
LINE_TABLE_H2: Dict[str, Dict[str, int]] = {
    "AAA": {"A": 3},
    "AB1B1": {"A": 1, "B1": 1},
    "AB2B2": {"A": 6, "B2": 3},
    "AB3B3": {"A": 16, "B3": 4},
    "AB4B4": {"A": 4, "B4": 7},
    "AB5B5": {"A": 3, "B5": 1},
    "B1B1B1": {"B1": 3},
    "B1B1B2": {"B1": 16, "B2": 4},
    "B1B1B5": {"B1": 6, "B5": 1},
    "B1B2B4": {"B1": 4, "B2": 2, "B4": 7},
    "B1B3B3": {"B1": 12, "B3": 6},
    "B1B3C": {"B1": 12, "B3": 3, "C": 42},
    "B2B2B2": {"B2": 12},
    "B2B2B5": {"B2": 6, "B5": 2},
    "B2B3B3": {"B2": 10, "B3": 10},
    "B2CC": {"B2": 1, "C": 14},
    "B3B3B5": {"B3": 3, "B5": 2},
    "B4B4C": {"B4": 1, "C": 1},
    "B5B5B5": {"B5": 1},
    "B5CC": {"B5": 1, "C": 21},
}

HYPERPLANE_TOTAL = (1 << 14) - 1  # both hexagons: nullspace dimension 14
HYPERPLANE_CLASSES = {"h2": 25, "h2dual": 14}
CLASSES_WITH_VALUATIONS = {"h2": 7, "h2dual": 4}
#: the one hyperplane class per hexagon carrying two (isomorphic) valuations
TWO_VALUATION_CLASS = {"h2": "B4", "h2dual": "B"}

OVOID_COUNT = {"h2": 36, "h2dual": 0}

#: the Type-C / CCC restriction of the valuation geometry of H^D(2)
VPRIME_POINTS = 252
VPRIME_LINES = 672
VPRIME_LINES_PER_POINT = 8
#: grids rooted at a point (4 sightings per distinct grid point set)
VPRIME_GRID_COMPLETIONS_PER_POINT = 16
VPRIME_DISTINCT_GRIDS = 112

POINT_BOUND = {(2, 2): 63, (2, 8): 819}

VALUATION_TABLES = {"h2": VALUATION_TABLE_H2, "h2dual": VALUATION_TABLE_H2DUAL}
LINE_TABLES = {"h2": LINE_TABLE_H2, "h2dual": LINE_TABLE_H2DUAL}

VALUATION_TOTALS = {"h2": 1431, "h2dual": 1575}
