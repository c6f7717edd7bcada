"""Committed coordinate fixtures for the gallery drawings.

The first three are almost embeddings of K4 / K5-minus-an-edge with large
prescribed windings; the last two are a triod and a triangle chain with Wu
number 5.  Coordinates were produced with the library's own generators (the
alternating-sum-3 drawing by randomized search over exact drawings) and then
frozen; tests recompute every claimed invariant from scratch.
"""

from __future__ import annotations

from .drawing import Drawing, drawing_from_dict
from .exact import Point2, rat
from .invariants import TriangleChain, Triod
from .winding import Polyline


def _pt(item):
    x, y = item
    return Point2(rat(x), rat(y))


FIG_8_2_JSON: dict = {
    "graph": {
        "kind": "k4"
    },
    "placement": {
        "1": [
            "0",
            "0"
        ],
        "2": [
            "4",
            "0"
        ],
        "3": [
            "2",
            "3"
        ],
        "4": [
            "2",
            "1"
        ]
    },
    "edges": {
        "1-2": [
            [
                "0",
                "0"
            ],
            [
                "4",
                "0"
            ]
        ],
        "1-3": [
            [
                "0",
                "0"
            ],
            [
                "2",
                "3"
            ]
        ],
        "1-4": [
            [
                "0",
                "0"
            ],
            [
                "2",
                "1"
            ]
        ],
        "2-3": [
            [
                "4",
                "0"
            ],
            [
                "3",
                "3/2"
            ],
            [
                "11/4",
                "10/7"
            ],
            [
                "17/8",
                "61/56"
            ],
            [
                "-1/8",
                "61/56"
            ],
            [
                "-1/8",
                "-5/56"
            ],
            [
                "17/8",
                "-5/56"
            ],
            [
                "11/4",
                "10/7"
            ],
            [
                "5/2",
                "19/14"
            ],
            [
                "-1/2",
                "19/14"
            ],
            [
                "-1/2",
                "-5/14"
            ],
            [
                "5/2",
                "-5/14"
            ],
            [
                "3",
                "3/2"
            ],
            [
                "2",
                "3"
            ]
        ],
        "2-4": [
            [
                "4",
                "0"
            ],
            [
                "2",
                "1"
            ]
        ],
        "3-4": [
            [
                "2",
                "3"
            ],
            [
                "2",
                "1"
            ]
        ]
    }
}

FIG_8_4_JSON: dict = {
    "graph": {
        "kind": "k4"
    },
    "placement": {
        "1": [
            "5",
            "3"
        ],
        "2": [
            "1",
            "2"
        ],
        "3": [
            "9",
            "2"
        ],
        "4": [
            "6",
            "9"
        ]
    },
    "edges": {
        "1-2": [
            [
                "5",
                "3"
            ],
            [
                "7",
                "10"
            ],
            [
                "0",
                "7"
            ],
            [
                "1",
                "2"
            ]
        ],
        "1-3": [
            [
                "5",
                "3"
            ],
            [
                "9",
                "2"
            ]
        ],
        "1-4": [
            [
                "5",
                "3"
            ],
            [
                "0",
                "1"
            ],
            [
                "5",
                "10"
            ],
            [
                "6",
                "9"
            ]
        ],
        "2-3": [
            [
                "1",
                "2"
            ],
            [
                "7",
                "5"
            ],
            [
                "9",
                "2"
            ]
        ],
        "2-4": [
            [
                "1",
                "2"
            ],
            [
                "9",
                "8"
            ],
            [
                "3",
                "7"
            ],
            [
                "6",
                "9"
            ]
        ],
        "3-4": [
            [
                "9",
                "2"
            ],
            [
                "2",
                "3"
            ],
            [
                "4",
                "1"
            ],
            [
                "6",
                "9"
            ]
        ]
    }
}

FIG_8_5_JSON: dict = {
    "graph": {
        "kind": "k5-45"
    },
    "placement": {
        "1": [
            "0",
            "0"
        ],
        "2": [
            "8",
            "0"
        ],
        "3": [
            "4",
            "6"
        ],
        "4": [
            "4",
            "4"
        ],
        "5": [
            "4",
            "8"
        ]
    },
    "edges": {
        "1-2": [
            [
                "0",
                "0"
            ],
            [
                "4",
                "0"
            ],
            [
                "9/2",
                "23/14"
            ],
            [
                "35/8",
                "153/56"
            ],
            [
                "65/16",
                "443/112"
            ],
            [
                "65/16",
                "901/112"
            ],
            [
                "63/16",
                "901/112"
            ],
            [
                "63/16",
                "443/112"
            ],
            [
                "35/8",
                "153/56"
            ],
            [
                "17/4",
                "107/28"
            ],
            [
                "17/4",
                "229/28"
            ],
            [
                "15/4",
                "229/28"
            ],
            [
                "15/4",
                "107/28"
            ],
            [
                "9/2",
                "23/14"
            ],
            [
                "5",
                "23/7"
            ],
            [
                "5",
                "61/7"
            ],
            [
                "3",
                "61/7"
            ],
            [
                "3",
                "23/7"
            ],
            [
                "4",
                "0"
            ],
            [
                "8",
                "0"
            ]
        ],
        "1-3": [
            [
                "0",
                "0"
            ],
            [
                "4",
                "6"
            ]
        ],
        "1-4": [
            [
                "0",
                "0"
            ],
            [
                "4",
                "4"
            ]
        ],
        "1-5": [
            [
                "0",
                "0"
            ],
            [
                "4",
                "8"
            ]
        ],
        "2-3": [
            [
                "8",
                "0"
            ],
            [
                "4",
                "6"
            ]
        ],
        "2-4": [
            [
                "8",
                "0"
            ],
            [
                "4",
                "4"
            ]
        ],
        "2-5": [
            [
                "8",
                "0"
            ],
            [
                "4",
                "8"
            ]
        ],
        "3-4": [
            [
                "4",
                "6"
            ],
            [
                "4",
                "4"
            ]
        ],
        "3-5": [
            [
                "4",
                "6"
            ],
            [
                "4",
                "8"
            ]
        ]
    }
}

FIG_8_6_LEFT: dict = {
    "center": [
        "2",
        "1"
    ],
    "legs": [
        [
            [
                "2",
                "1"
            ],
            [
                "1",
                "1/2"
            ],
            [
                "21/16",
                "35/16"
            ],
            [
                "63/32",
                "27/8"
            ],
            [
                "19/8",
                "97/32"
            ],
            [
                "21/16",
                "35/16"
            ],
            [
                "13/8",
                "31/8"
            ],
            [
                "23/8",
                "27/8"
            ],
            [
                "1",
                "1/2"
            ],
            [
                "0",
                "0"
            ]
        ],
        [
            [
                "2",
                "1"
            ],
            [
                "4",
                "0"
            ]
        ],
        [
            [
                "2",
                "1"
            ],
            [
                "2",
                "3"
            ]
        ]
    ]
}

FIG_8_6_RIGHT: dict = {
    "lines": [
        [
            [
                "0",
                "0"
            ],
            [
                "4",
                "0"
            ]
        ],
        [
            [
                "4",
                "0"
            ],
            [
                "3",
                "3/2"
            ],
            [
                "15/16",
                "15/16"
            ],
            [
                "-15/32",
                "0"
            ],
            [
                "0",
                "-15/32"
            ],
            [
                "15/16",
                "15/16"
            ],
            [
                "-9/8",
                "3/8"
            ],
            [
                "-3/8",
                "-9/8"
            ],
            [
                "3",
                "3/2"
            ],
            [
                "2",
                "3"
            ]
        ],
        [
            [
                "2",
                "3"
            ],
            [
                "0",
                "0"
            ]
        ]
    ]
}


def fig_8_2() -> Drawing:
    """Almost embedding of K4 with w_f(123, 4) = 3."""
    return drawing_from_dict(FIG_8_2_JSON)


def fig_8_4() -> Drawing:
    """Almost embedding of K4 with alternating winding sum 3."""
    return drawing_from_dict(FIG_8_4_JSON)


def fig_8_5() -> Drawing:
    """Almost embedding of K5 minus 45 with w_f(123, 5) = 3."""
    return drawing_from_dict(FIG_8_5_JSON)


def fig_8_6_left() -> Triod:
    """Triod with triodic Wu number 5."""
    data = FIG_8_6_LEFT
    return Triod(_pt(data["center"]), [Polyline([_pt(p) for p in leg]) for leg in data["legs"]])


def fig_8_6_right() -> TriangleChain:
    """Triangle chain with cyclic Wu number 5."""
    data = FIG_8_6_RIGHT
    return TriangleChain([Polyline([_pt(p) for p in line]) for line in data["lines"]])


FIGURE_NAMES = ("fig_8_2", "fig_8_4", "fig_8_5", "fig_8_6_left", "fig_8_6_right")
