"""Generate data/expected.json: recorded automorphism families and invariant
tables for every catalog entry, transcribed symbol-for-symbol.

Symbol scheme: a printed symbol with subscript i and superscript j becomes
<letter>{i}_{j}: theta -> t, d -> d, d' -> dp, d'' -> dq, eta -> h,
delta -> g, R -> r, N -> n, chi -> x, xi -> s, beta -> b.  Every distinct
symbol is treated as an independent parameter.  The tables preserve the
source's oddities (stray beta entries, repeated symbols, phantom exclusion
parameters); notes call them out where they affect reading.
"""

import json
import os

# -- automorphism family displays -------------------------------------------

I4 = [["1", "0", "0", "0"], ["0", "1", "0", "0"], ["0", "0", "1", "0"], ["0", "0", "0", "1"]]

AUT_ID_SHIFT = [
    ["1", "0", "0", "t1_4"],
    ["0", "1", "0", "t2_4"],
    ["0", "0", "1", "0"],
    ["0", "0", "0", "1"],
]

AUT_A4_1_A4_17 = {
    "entries": [
        ["t2_1", "0", "t1_3", "t2_4"],
        ["0", "t2_2", "t2_3", "0"],
        ["0", "0", "t2_3^2", "0"],
        ["0", "0", "0", "t2_4^2"],
    ],
    "exclusions": ["t2_1", "t2_2", "t2_3", "t2_4"],
}

AUT_A4_3_STYLE = {  # row 2 leads with t1_2
    "entries": [
        ["t2_1", "0", "t1_3", "t1_4"],
        ["0", "t1_2", "t2_3", "t2_4"],
        ["0", "0", "t2_3^2", "0"],
        ["0", "0", "0", "t2_4^2"],
    ],
    "exclusions": ["t1_2", "t2_3", "t2_4"],
}

AUT_T22_STYLE = {  # row 2 leads with t2_2; phantom t1_2 in the condition
    "entries": [
        ["t2_1", "0", "t1_3", "t1_4"],
        ["0", "t2_2", "t2_3", "t2_4"],
        ["0", "0", "t2_3^2", "0"],
        ["0", "0", "0", "t2_4^2"],
    ],
    "exclusions": ["t1_2", "t2_3", "t2_4"],
}

AUT_A4_2_A4_5 = {
    "entries": [
        ["t1_1", "0", "0", "t1_4"],
        ["0", "t1_2", "0", "t2_4"],
        ["0", "0", "t2_3", "t3_4"],
        ["0", "0", "0", "t2_4"],
    ],
    "exclusions": ["t1_1", "t1_2", "t2_3", "t2_4"],
}

AUT_A4_2_A4_16 = {
    "entries": [
        ["t1_1", "0", "0", "t1_4"],
        ["0", "t1_2", "0", "t2_4"],
        ["0", "0", "t2_3", "0"],
        ["0", "0", "0", "t2_4^2"],
    ],
    "exclusions": ["t1_1", "t1_2", "t2_3", "t2_4"],
}

AUT_A4_2_A4_28 = {
    "entries": [
        ["1", "0", "0", "t1_4"],
        ["0", "t1_2", "0", "t2_3"],
        ["0", "0", "t2_3", "0"],
        ["0", "0", "0", "t2_4"],
    ],
    "exclusions": ["t1_2", "t2_3", "t2_4"],
}

AUT_A4_43_A4_44 = {
    "entries": [
        ["1", "0", "0", "0"],
        ["0", "t1_2", "t2_3", "t2_4"],
        ["0", "0", "t2_3", "t3_4"],
        ["0", "0", "0", "t2_4^2"],
    ],
    "exclusions": ["t1_2", "t2_3", "t2_4"],
}


def with_exclusions(display, exclusions):
    return {"entries": display["entries"], "exclusions": exclusions}


AUT = {
    "dim2-01-A2_1-A2_4": [
        {"entries": [["1", "0"], ["0", "t"]], "exclusions": ["t"]},
    ],
    "dim3-01-A3_1-A3_2": [
        {
            "entries": [
                ["t1_1", "0", "0"],
                ["t1_2", "t1_2*t2_2", "t3_2"],
                ["0", "0", "t3_3"],
            ],
            "exclusions": ["t1_1", "t1_2", "t3_3"],
        },
    ],
    "dim3-02-A3_1-A3_11": [
        {
            "entries": [["t1_1", "0", "0"], ["0", "t1_2", "0"], ["0", "0", "1"]],
            "exclusions": ["t1_1", "t1_2"],
        },
    ],
    "dim3-03-A3_10-A3_12": [
        {
            "entries": [["t1_1", "0", "0"], ["t1_2", "t1_2^2", "0"], ["0", "0", "1"]],
            "exclusions": ["t1_1", "t1_2"],
        },
    ],
    "dim4-01-A4_1-A4_3": [
        {
            "entries": [
                ["t2_1", "0", "t1_3", "t1_4"],
                ["0", "t2_2", "t2_3", "t2_4"],
                ["0", "0", "t3_2^2", "0"],
                ["0", "0", "0", "t2_2^2"],
            ],
            "exclusions": ["t2_1", "t2_2", "t2_3", "t2_4"],
            "note": "the (3,3) cell mixes subscripts (t3_2 squared) as printed",
        },
    ],
    "dim4-02-A4_1-A4_4": [{"entries": AUT_ID_SHIFT, "exclusions": []}],
    "dim4-03-A4_1-A4_6": [{"entries": AUT_ID_SHIFT, "exclusions": []}],
    "dim4-04-A4_1-A4_17": [AUT_A4_1_A4_17],
    "dim4-05-A4_1-A4_18": [AUT_A4_1_A4_17],
    "dim4-06-A4_1-A4_24": [
        {
            "entries": [
                ["1", "0", "0", "0"],
                ["0", "1", "t2_3", "t2_4"],
                ["0", "0", "t2_3^2", "0"],
                ["0", "1", "0", "t2_4"],
            ],
            "exclusions": ["t2_3", "t2_4"],
            "note": "the (4,2) cell is 1 as printed",
        },
    ],
    "dim4-07-A4_2-A4_5": [AUT_A4_2_A4_5],
    "dim4-08-A4_2-A4_10": [AUT_A4_2_A4_5],
    "dim4-09-A4_2-A4_16": [AUT_A4_2_A4_16, AUT_A4_2_A4_16],
    "dim4-10-A4_2-A4_25": [AUT_A4_2_A4_16, AUT_A4_2_A4_16],
    "dim4-11-A4_2-A4_28": [
        AUT_A4_2_A4_28,
        with_exclusions(AUT_A4_2_A4_28, ["t1_1", "t1_2", "t2_3", "t2_4"]),
    ],
    "dim4-12-A4_3-A4_4": [AUT_A4_3_STYLE, AUT_A4_3_STYLE],
    "dim4-13-A4_3-A4_6": [AUT_A4_3_STYLE, AUT_A4_3_STYLE],
    "dim4-14-A4_3-A4_17": [AUT_T22_STYLE, AUT_T22_STYLE],
    "dim4-15-A4_3-A4_18": [AUT_T22_STYLE, AUT_T22_STYLE],
    "dim4-16-A4_4-A4_6": [AUT_T22_STYLE, AUT_T22_STYLE],
    "dim4-17-A4_4-A4_17": [AUT_T22_STYLE, AUT_T22_STYLE],
    "dim4-18-A4_4-A4_18": [
        {"entries": AUT_ID_SHIFT, "exclusions": []},
        {"entries": AUT_ID_SHIFT, "exclusions": []},
    ],
    "dim4-19-A4_5-A4_25": [
        {
            "entries": [
                ["t2_1", "0", "0", "t1_4"],
                ["0", "t2_2", "0", "t2_4"],
                ["0", "0", "t2_3", "t3_4"],
                ["0", "0", "0", "t2_4"],
            ],
            "exclusions": ["t2_1", "t2_2", "t2_3", "t2_4"],
        },
    ],
    "dim4-20-A4_5-A4_28": [
        {
            "radical": True,
            "note": "the printed family contains -sqrt(t1_3 + t2_3); outside the rational scalar model",
        },
    ],
    "dim4-21-A4_6-A4_17": [
        {
            "entries": [
                ["t2_1", "0", "t1_3", "t1_4"],
                ["0", "t2_2", "t2_3", "t2_4"],
                ["0", "0", "t2_3^2", "0"],
                ["0", "0", "0", "t2_4"],
            ],
            "exclusions": ["t2_1", "t2_2", "t2_3", "t2_4"],
        },
    ],
    "dim4-22-A4_6-A4_18": [{"entries": AUT_ID_SHIFT, "exclusions": []}],
    "dim4-23-A4_10-A4_25": [
        {
            "entries": [
                ["t2_1", "0", "t1_3", "t1_4"],
                ["0", "t2_2", "t2_2", "t2_4"],
                ["0", "0", "t2_3^2", "0"],
                ["0", "0", "0", "t2_4^2"],
            ],
            "exclusions": ["t2_1", "t2_2", "t2_3", "t2_4"],
            "note": "the (2,3) cell repeats t2_2 as printed",
        },
    ],
    "dim4-24-A4_11-A4_23": [
        {
            "entries": [
                ["1", "0", "t1_3", "t1_4"],
                ["0", "1", "t2_2", "0"],
                ["0", "0", "1", "0"],
                ["0", "0", "-t1_3", "1"],
            ],
            "exclusions": [],
        },
    ],
    "dim4-25-A4_16-A4_25": [
        {
            "entries": [
                ["t1_1", "0", "0", "t1_4"],
                ["0", "t1_2", "0", "t2_4"],
                ["0", "0", "t1_3", "t3_4"],
                ["0", "0", "0", "t1_4^2"],
            ],
            "exclusions": ["t1_1", "t1_2", "t1_3", "t1_4"],
        },
    ],
    "dim4-26-A4_16-A4_28": [
        {
            "entries": [
                ["1", "0", "0", "t1_4"],
                ["0", "1", "0", "-t1_4"],
                ["0", "0", "-1", "0"],
                ["0", "0", "0", "1"],
            ],
            "exclusions": [],
        },
    ],
    "dim4-27-A4_17-A4_18": [
        {
            "entries": [
                ["t1_1", "0", "t2_3", "t1_4"],
                ["0", "t2_2", "t2_3", "t1_4"],
                ["0", "0", "t2_3^2", "0"],
                ["0", "0", "0", "t2_4^2"],
            ],
            "exclusions": ["t1_1", "t2_2", "t2_3", "t2_4"],
        },
    ],
    "dim4-28-A4_25-A4_28": [
        {
            "entries": [
                ["t1_1", "0", "0", "0"],
                ["0", "t2_2", "0", "0"],
                ["t2_3", "t2_3", "t2_3^2", "0"],
                ["t1_4", "t1_4", "0", "t2_4^2"],
            ],
            "exclusions": ["t1_1", "t1_2", "t2_3", "t2_4"],
        },
    ],
    "dim4-30-A4_33-A4_45": [
        {
            "entries": [
                ["1", "t2_2", "0", "0"],
                ["0", "1", "0", "0"],
                ["0", "0", "1", "0"],
                ["0", "0", "0", "1"],
            ],
            "exclusions": [],
        },
        {"entries": I4, "exclusions": []},
    ],
    "dim4-31-A4_37-A4_39": [
        {
            "entries": [
                ["1", "0", "0", "0"],
                ["0", "t1_2", "0", "0"],
                ["0", "0", "t1_3^2", "0"],
                ["0", "0", "0", "t1_3^4"],
            ],
            "exclusions": ["t1_2", "t2_3", "t2_4"],
        },
    ],
    "dim4-32-A4_40-A4_43": [
        {
            "entries": [
                ["1", "0", "0", "0"],
                ["0", "t1_2", "t2_3", "t2_4"],
                ["0", "0", "t3_3", "t3_4"],
                ["0", "0", "0", "t1_3^4"],
            ],
            "exclusions": ["t1_2", "t2_3", "t2_4"],
        },
    ],
    "dim4-33-A4_40-A4_44": [
        {
            "entries": [
                ["1", "0", "0", "0"],
                ["0", "t1_2", "t2_3", "t2_4"],
                ["0", "0", "t3_3", "t3_4"],
                ["0", "0", "0", "t2_4*t3_4"],
            ],
            "exclusions": ["t1_2", "t2_3", "t2_4"],
        },
    ],
    "dim4-35-A4_40-A4_46": [
        {
            "entries": [
                ["t2_1", "0", "0", "0"],
                ["0", "t1_2", "t2_3", "t2_4"],
                ["0", "0", "t2_3^2", "2*t2_4*t3_4"],
                ["0", "0", "0", "t2_4^2"],
            ],
            "exclusions": ["t1_2", "t2_3", "t2_4"],
        },
        {
            "entries": [
                ["1", "0", "0", "0"],
                ["0", "t1_2", "t2_3", "t2_4"],
                ["0", "0", "t2_3^2", "t3_4"],
                ["0", "0", "0", "t2_4^2"],
            ],
            "exclusions": ["t1_2", "t2_3", "t3_4"],
        },
    ],
    "dim4-36-A4_43-A4_44": [AUT_A4_43_A4_44],
    "dim4-37-A4_43-A4_45": [
        with_exclusions(AUT_A4_43_A4_44, ["t1_1", "t1_2", "t2_3", "t2_4"]),
    ],
    "dim4-38-A4_43-A4_46": [AUT_A4_43_A4_44],
    "dim4-39-A4_44-A4_46": [
        with_exclusions(AUT_A4_43_A4_44, ["t1_1", "t1_2", "t2_3", "t2_4"]),
    ],
}

# -- linear invariant tables --------------------------------------------------

Z4 = [["0"] * 4 for _ in range(4)]


def m(*rows):
    return [list(r) for r in rows]


LINEAR = {
    "dim2-01-A2_1-A2_4": {
        "derivation": m(("0", "0"), ("0", "d2_2")),
        "centroid": m(("h1_1", "0"), ("0", "h2_1")),
        "quasi-centroid": m(("g1_1", "0"), ("g1_2", "g1_2")),
        "quasi-derivation": [
            m(("d1_1", "0"), ("dp1_2", "d2_2")),
            m(("dp1_1", "dp1_2"), ("dp1_2+2*dp2_2", "d2_2")),
        ],
        "generalized-derivation": [
            m(("d1_1", "-dq1_1+dp1_1-d1_1"), ("dq1_2", "dq2_2")),
            m(("d1_1", "d2_1"), ("0", "dq1_2+dq2_2-dp1_1")),
            m(("dp1_1", "0"), ("-d1_2", "dq1_2+dq2_2-d1_1")),
        ],
    },
    "dim3-01-A3_1-A3_2": {
        "derivation": m(("d1_1", "0", "0"), ("d1_2", "d2_2", "d3_2"), ("0", "0", "d2_3-d1_3")),
        "centroid": m(("h2_1", "0", "0"), ("h1_2", "b2_2", "b3_2"), ("0", "0", "h2_3")),
        "quasi-centroid": m(("g1_1", "0", "0"), ("g1_2", "g2_2", "g3_2"), ("0", "0", "g1_3")),
    },
    "dim3-02-A3_1-A3_11": {
        "derivation": m(("d1_1", "0", "0"), ("0", "d1_2", "0"), ("0", "0", "0")),
        "centroid": m(("h1_1", "0", "0"), ("0", "h1_2", "b3_2"), ("0", "0", "h1_3")),
        "quasi-centroid": m(("g1_1", "0", "g3_1"), ("0", "g1_2", "g3_2"), ("0", "0", "g1_3")),
    },
    "dim3-03-A3_10-A3_12": {
        "derivation": m(("d1_1", "0", "0"), ("d1_2", "2*d1_2", "0"), ("0", "0", "0")),
        "centroid": m(("h1_1", "0", "0"), ("0", "h1_2", "h3_2"), ("0", "0", "h1_3")),
        "quasi-centroid": m(("g1_1", "0", "0"), ("0", "g1_2", "g3_2"), ("0", "0", "g1_3")),
    },
    "dim4-01-A4_1-A4_3": {
        "derivation": m(("d1_1", "0", "0", "0"), ("0", "d1_2", "0", "0"), ("d1_3", "d2_3", "d1_3", "0"), ("d1_4", "d2_4", "0", "2*d1_4")),
        "centroid": m(("h2_1", "0", "0", "0"), ("0", "h1_2", "0", "0"), ("h1_3", "h2_3", "h1_3", "0"), ("h1_4", "h2_4", "0", "h1_4")),
        "quasi-centroid": m(("g1_1", "0", "0", "0"), ("0", "0", "g1_2", "0"), ("g1_3", "g2_3", "g3_3", "g4_3"), ("g1_4", "g2_4", "0", "g2_4^2")),
    },
    "dim4-02-A4_1-A4_4": {
        "derivation": m(("0", "0", "0", "0"), ("0", "0", "0", "0"), ("0", "0", "0", "0"), ("d1_4", "d2_4", "0", "0")),
        "centroid": m(("h1_1", "0", "0", "0"), ("0", "h1_2", "0", "0"), ("0", "0", "h1_3", "0"), ("h1_4", "h2_4", "0", "h1_4")),
        "quasi-centroid": m(("g1_1", "0", "0", "0"), ("0", "g1_2", "0", "0"), ("0", "0", "g1_3", "0"), ("g1_4", "g2_4", "g3_4", "g4_4")),
    },
    "dim4-03-A4_1-A4_6": {
        "derivation": m(("0", "0", "0", "0"), ("0", "0", "0", "0"), ("0", "0", "0", "0"), ("d1_4", "d2_4", "0", "0")),
        "centroid": m(("h4_1", "0", "0", "0"), ("0", "h4_2", "0", "0"), ("0", "0", "h4_3", "0"), ("h1_4", "h2_4", "0", "h4_4")),
        "quasi-centroid": m(("g1_1", "0", "0", "0"), ("0", "g1_2", "0", "0"), ("0", "0", "g1_3", "0"), ("g1_4", "g2_4", "g3_4", "g4_4")),
    },
    "dim4-04-A4_1-A4_17": {
        "derivation": m(("d1_1", "0", "0", "0"), ("0", "d1_2", "0", "0"), ("d1_3", "d2_3", "2*d1_3", "0"), ("d1_4", "d2_4", "0", "2*d1_4")),
        "centroid": m(("h1_1", "0", "0", "0"), ("0", "h1_2", "0", "0"), ("b1_3", "h2_3", "h1_3", "0"), ("b1_4", "h2_4", "0", "h1_4")),
        "quasi-centroid": m(("g1_1", "0", "0", "0"), ("0", "g1_2", "0", "0"), ("g1_3", "g2_3", "g3_3", "0"), ("g1_4", "g2_4", "g3_4", "g4_4")),
    },
    "dim4-05-A4_1-A4_18": {
        "derivation": m(("d1_1", "0", "0", "0"), ("0", "d1_2", "0", "0"), ("d1_3", "d2_3", "2*d1_3", "0"), ("d1_4", "d2_4", "0", "2*d1_4")),
        "centroid": m(("h1_1", "0", "0", "0"), ("0", "h1_2", "0", "0"), ("h1_3", "h2_3", "h1_3", "0"), ("h1_4", "h2_4", "0", "h1_4")),
        "quasi-centroid": m(("g1_1", "0", "0", "0"), ("0", "g1_2", "0", "0"), ("g1_3", "g2_3", "g3_3", "0"), ("g1_4", "g2_4", "g3_4", "g4_4")),
    },
    "dim4-06-A4_1-A4_24": {
        "derivation": m(("0", "0", "0", "0"), ("0", "0", "0", "0"), ("0", "d2_3", "0", "0"), ("0", "0", "d2_4", "d4_4")),
        "centroid": m(("h1_1", "0", "0", "0"), ("0", "h1_2", "0", "0"), ("0", "0", "h1_3", "0"), ("0", "0", "0", "h1_4")),
        "quasi-centroid": m(("g1_1", "g2_1", "0", "0"), ("0", "g1_2", "0", "0"), ("0", "0", "g1_3", "0"), ("0", "0", "0", "g1_4")),
    },
    "dim4-07-A4_2-A4_5": {
        "derivation": m(("d1_1", "0", "0", "0"), ("0", "d1_2", "0", "0"), ("0", "0", "d1_3", "0"), ("d1_4", "d2_4", "d3_4", "d4_4")),
        "centroid": m(("h1_1", "0", "0", "0"), ("0", "h1_2", "0", "0"), ("0", "0", "h1_3", "0"), ("h1_4", "h2_4", "h3_4", "h1_4")),
        "quasi-centroid": m(("g1_1", "0", "0", "0"), ("0", "g1_2", "0", "0"), ("0", "0", "g1_3", "0"), ("g1_4", "g2_4", "g3_4", "g1_4")),
    },
    "dim4-08-A4_2-A4_10": {
        "derivation": m(("0", "0", "0", "0"), ("0", "0", "0", "0"), ("0", "0", "0", "0"), ("d1_4", "d2_4", "0", "0")),
        "centroid": m(("h1_1", "0", "0", "0"), ("0", "h1_2", "0", "0"), ("0", "0", "h1_3", "0"), ("b1_4", "h2_4", "0", "h1_4")),
        "quasi-centroid": m(("g1_1", "0", "0", "0"), ("0", "g1_2", "0", "0"), ("0", "0", "g1_3", "0"), ("g1_4", "g2_4", "g3_4", "g1_4")),
    },
    "dim4-09-A4_2-A4_16": {
        "derivation": m(("d1_1", "0", "0", "0"), ("0", "d1_2", "0", "0"), ("0", "0", "d1_3", "0"), ("d1_4", "d2_4", "d3_4", "2*d1_4")),
        "centroid": m(("h4_1", "0", "0", "0"), ("0", "h4_2", "0", "0"), ("0", "0", "h4_3", "0"), ("b1_4", "h2_4", "h3_4", "h4_4")),
        "quasi-centroid": m(("g1_1", "0", "0", "0"), ("0", "g1_2", "0", "0"), ("0", "0", "g1_3", "0"), ("g1_4", "g2_4", "g3_4", "g4_4")),
    },
    "dim4-10-A4_2-A4_25": {
        "derivation": m(("d1_1", "0", "0", "0"), ("0", "d1_2", "0", "0"), ("0", "0", "d1_3", "0"), ("d1_4", "d2_4", "d3_4", "2*d1_4")),
        "centroid": m(("h1_1", "0", "0", "0"), ("0", "h1_2", "0", "0"), ("0", "0", "h1_3", "0"), ("h1_4", "h2_4", "h3_4", "h1_4")),
        "quasi-centroid": m(("g1_1", "0", "0", "0"), ("0", "g1_2", "0", "0"), ("0", "0", "g1_3", "0"), ("g1_4", "g2_4", "g3_4", "g4_4")),
    },
    "dim4-11-A4_2-A4_28": {
        "derivation": m(("0", "0", "0", "0"), ("0", "d2_2", "0", "0"), ("0", "0", "d2_3", "0"), ("d1_4", "0", "0", "d2_4")),
        "centroid": m(("h1_1", "0", "0", "0"), ("0", "h1_2", "0", "0"), ("0", "0", "h1_3", "0"), ("h1_4", "h2_4", "h3_4", "h1_4")),
        "quasi-centroid": m(("g1_1", "0", "0", "0"), ("0", "g1_2", "0", "0"), ("0", "0", "g1_3", "0"), ("0", "0", "0", "g1_4")),
    },
    "dim4-12-A4_3-A4_4": {
        "derivation": m(("d1_1", "0", "0", "0"), ("0", "d1_2", "0", "0"), ("d2_3", "d1_2", "2*d1_3", "0"), ("d1_4", "d2_4", "0", "2*d1_4")),
        "centroid": m(("h1_1", "0", "0", "0"), ("0", "h1_2", "0", "0"), ("h1_3", "h2_3", "h1_3", "0"), ("h1_4", "h2_4", "0", "h1_4")),
        "quasi-centroid": m(("g1_1", "0", "0", "0"), ("0", "g1_2", "0", "0"), ("g1_3", "g2_3", "g3_3", "g3_4"), ("g1_4", "g2_4", "0", "g1_4")),
    },
    "dim4-13-A4_3-A4_6": {
        "derivation": m(("d2_1", "0", "0", "0"), ("d1_2", "d2_2", "0", "0"), ("d2_3", "d1_2", "2*d2_3", "0"), ("d1_4", "d2_4", "0", "2*d2_4")),
        "centroid": m(("h4_1", "0", "0", "0"), ("0", "h4_2", "0", "0"), ("h1_3", "h2_3", "h4_3", "0"), ("h1_4", "h2_4", "0", "h4_4")),
        "quasi-centroid": m(("g1_1", "0", "0", "0"), ("0", "g1_2", "0", "0"), ("g1_3", "g2_3", "g3_3", "g3_4"), ("g1_4", "g2_4", "0", "g4_4")),
    },
    "dim4-14-A4_3-A4_17": {
        "derivation": m(("d2_1", "0", "0", "0"), ("0", "d1_2", "0", "0"), ("d2_3", "d1_2", "2*d1_3", "0"), ("d1_4", "d2_4", "0", "2*d1_4")),
        "centroid": m(("h1_1", "0", "0", "0"), ("0", "h1_2", "0", "0"), ("h1_3", "0", "h1_3", "0"), ("h1_4", "h2_4", "0", "h1_4")),
        "quasi-centroid": m(("g1_1", "0", "0", "0"), ("0", "g1_2", "0", "0"), ("g1_3", "g2_3", "g3_3", "g4_3"), ("g1_4", "g2_4", "g3_4", "g4_4")),
    },
    "dim4-15-A4_3-A4_18": {
        "derivation": m(("d2_1", "0", "0", "0"), ("0", "d1_2", "0", "0"), ("d2_3", "d1_2", "2*d1_3", "0"), ("d1_4", "d2_4", "0", "2*d1_4")),
        "centroid": m(("h1_1", "0", "0", "0"), ("0", "h1_2", "0", "0"), ("h1_3", "h2_3", "h1_3", "0"), ("h1_4", "h2_4", "0", "h1_4")),
        "quasi-centroid": m(("g1_1", "0", "0", "0"), ("0", "g1_2", "0", "0"), ("g1_3", "g2_3", "g3_3", "g4_3"), ("g1_4", "g2_4", "g3_4", "g4_4")),
    },
    "dim4-16-A4_4-A4_6": {
        "derivation": m(("d2_1", "0", "0", "0"), ("0", "d2_2", "0", "0"), ("d1_3", "d3_2", "2*d2_3", "0"), ("d1_4", "d2_4", "0", "2*d2_4")),
        "centroid": m(("h4_1", "0", "0", "0"), ("0", "h4_2", "0", "0"), ("h1_3", "h2_3", "h4_3", "0"), ("h1_4", "h2_4", "0", "h4_4")),
        "quasi-centroid": m(("g1_1", "0", "0", "0"), ("0", "g1_2", "0", "0"), ("g1_3", "g2_3", "g3_3", "g4_3"), ("g1_4", "g2_4", "g3_4", "g4_4")),
    },
    "dim4-17-A4_4-A4_17": {
        "derivation": m(("d1_1", "0", "0", "0"), ("0", "d1_2", "0", "0"), ("d1_3", "d3_2", "2*d1_3", "0"), ("d1_4", "d2_4", "0", "2*d1_4")),
        "centroid": m(("h1_1", "0", "0", "0"), ("0", "h1_2", "0", "0"), ("h1_3", "h2_3", "h1_3", "0"), ("h1_4", "h2_4", "0", "h1_4")),
        "quasi-centroid": m(("g1_1", "0", "0", "0"), ("0", "g1_2", "0", "0"), ("g1_3", "g2_3", "g3_3", "g4_3"), ("g1_4", "g2_4", "g3_4", "g4_4")),
    },
    "dim4-18-A4_4-A4_18": {
        "derivation": m(("0", "0", "0", "0"), ("0", "0", "0", "0"), ("0", "0", "0", "0"), ("d1_4", "d2_4", "0", "0")),
        "centroid": m(("h4_1", "0", "0", "0"), ("0", "h4_2", "0", "0"), ("0", "0", "h4_3", "0"), ("h1_4", "h2_4", "0", "h4_4")),
        "quasi-centroid": m(("g1_1", "0", "0", "0"), ("0", "g1_2", "0", "0"), ("0", "0", "g3_3", "0"), ("g1_4", "g2_4", "g3_4", "g4_4")),
    },
    "dim4-19-A4_5-A4_25": {
        "derivation": m(("d1_1", "0", "0", "0"), ("0", "d1_2", "0", "0"), ("0", "0", "d1_3", "0"), ("d1_4", "d2_4", "d3_4", "2*d1_4")),
        "centroid": m(("h1_1", "0", "0", "0"), ("0", "h1_2", "0", "0"), ("0", "0", "h1_3", "0"), ("h1_4", "h2_4", "0", "h1_4")),
        "quasi-centroid": m(("g1_1", "0", "0", "0"), ("0", "g1_2", "0", "0"), ("0", "0", "g3_3", "0"), ("g1_4", "g2_4", "g3_4", "g4_4")),
    },
    "dim4-20-A4_5-A4_28": {
        "derivation": m(("d4_1/2", "0", "0", "0"), ("d4_2", "d4_2/2", "0", "0"), ("-d1_2", "0", "d4_3/2", "0"), ("d1_4", "d2_4", "d3_4", "d4_4")),
        "centroid": m(("h4_1", "0", "0", "0"), ("0", "h4_2", "0", "0"), ("0", "0", "h4_3", "0"), ("h1_4", "h2_4", "h3_4", "h4_4")),
        "quasi-centroid": m(("g1_1", "0", "0", "0"), ("0", "g1_2", "0", "0"), ("0", "0", "g3_3", "0"), ("g1_4", "g2_4", "g3_4", "g4_4")),
    },
    "dim4-21-A4_6-A4_17": {
        "derivation": m(("d2_1", "0", "0", "0"), ("0", "d2_2", "0", "0"), ("d3_1", "d2_3", "2*d2_3", "0"), ("d1_4", "d2_4", "0", "2*d2_4")),
        "centroid": m(("h4_1", "0", "0", "0"), ("0", "h4_2", "0", "0"), ("0", "0", "h4_3", "0"), ("h1_4", "h2_4", "0", "h4_4")),
        "quasi-centroid": m(("g1_1", "0", "0", "0"), ("0", "g1_2", "0", "0"), ("g1_3", "g2_3", "g3_3", "g4_3"), ("g1_4", "g2_4", "g3_4", "g4_4")),
    },
    "dim4-22-A4_6-A4_18": {
        "derivation": m(("0", "0", "0", "0"), ("0", "0", "0", "0"), ("0", "0", "0", "0"), ("d1_4", "d2_4", "0", "0")),
        "centroid": m(("h1_1", "0", "0", "0"), ("0", "h1_2", "0", "0"), ("0", "0", "h1_3", "0"), ("h1_4", "h2_4", "0", "h1_4")),
        "quasi-centroid": m(("g1_1", "0", "0", "0"), ("0", "g1_2", "0", "0"), ("g1_3", "0", "g1_3", "0"), ("g1_4", "g2_4", "g3_4", "g4_4")),
    },
    "dim4-23-A4_10-A4_25": {
        "derivation": m(("d2_1", "0", "0", "0"), ("0", "d2_2", "0", "0"), ("d3_1", "d2_3", "2*d2_3", "0"), ("d1_4", "d2_4", "0", "2*d2_4")),
        "centroid": m(("h4_1", "0", "0", "0"), ("0", "h4_2", "0", "0"), ("0", "0", "h4_3", "0"), ("h1_4", "h2_4", "0", "h4_4")),
        "quasi-centroid": m(("g1_1", "0", "0", "0"), ("0", "g1_2", "0", "0"), ("g1_3", "g2_3", "g3_3", "g4_3"), ("g1_4", "g2_4", "g3_4", "g4_4")),
    },
    "dim4-24-A4_11-A4_23": {
        "derivation": m(("0", "0", "0", "0"), ("0", "0", "0", "0"), ("d1_3", "d2_3", "0", "d4_3"), ("-d3_4/2", "0", "0", "0")),
        "centroid": m(("h1_1", "0", "0", "0"), ("0", "h1_2", "0", "0"), ("h1_3", "h2_3", "h1_3", "0"), ("h1_4", "0", "0", "h1_4")),
        "quasi-centroid": m(("g1_1", "0", "0", "0"), ("0", "g1_2", "0", "0"), ("g1_3", "g2_3", "g3_3", "g4_3"), ("g1_4", "g2_4", "g3_4", "g4_4")),
    },
    "dim4-25-A4_16-A4_25": {
        "derivation": m(("d4_1/2", "0", "0", "0"), ("0", "d4_2/2", "0", "0"), ("0", "0", "d4_3/2", "0"), ("d1_4", "d1_4", "d3_4", "d4_4")),
        "centroid": m(("h4_1", "0", "0", "0"), ("0", "h4_2", "0", "0"), ("0", "0", "h4_3", "0"), ("h1_4", "h2_4", "h3_4", "h4_4")),
        "quasi-centroid": m(("g1_1", "0", "0", "0"), ("0", "g1_2", "0", "0"), ("0", "0", "g1_3", "0"), ("g1_4", "g2_4", "g3_4", "g4_4")),
    },
    "dim4-26-A4_16-A4_28": {
        "derivation": m(("0", "0", "0", "0"), ("0", "0", "0", "0"), ("0", "0", "d3_3", "0"), ("d1_4", "-d1_4", "0", "0")),
        "centroid": m(("h4_1", "0", "0", "0"), ("0", "h4_2", "0", "0"), ("0", "0", "h4_3", "0"), ("0", "0", "0", "h4_4")),
        "quasi-centroid": m(("g1_1", "0", "0", "0"), ("0", "g1_2", "0", "0"), ("0", "0", "g1_3", "0"), ("0", "0", "0", "g1_4")),
    },
    "dim4-27-A4_17-A4_18": {
        "derivation": m(("d2_1", "0", "0", "0"), ("0", "d2_2", "0", "0"), ("d1_3", "d2_3", "2*d2_3", "0"), ("d1_4", "d2_4", "0", "2*d2_4")),
        "centroid": m(("h3_1", "0", "0", "0"), ("0", "h3_2", "0", "0"), ("0", "0", "h3_3", "0"), ("h1_4", "h2_3", "0", "h4_4")),
        "quasi-centroid": m(("g1_1", "0", "0", "0"), ("0", "g1_2", "0", "0"), ("g1_2", "g2_3", "g3_3", "0"), ("g1_4", "g2_4", "g3_4", "g4_4")),
    },
    "dim4-28-A4_25-A4_28": {
        "derivation": m(("0", "0", "0", "0"), ("0", "0", "0", "0"), ("0", "0", "0", "0"), ("d1_4", "d2_4", "0", "0")),
        "centroid": m(("h2_1", "0", "0", "0"), ("0", "h2_2", "0", "0"), ("0", "0", "h2_3", "0"), ("h1_4", "h2_3", "0", "h2_4")),
        "quasi-centroid": m(("g1_1", "0", "0", "0"), ("0", "g1_2", "0", "0"), ("g1_2", "g2_3", "g3_3", "0"), ("g1_4", "g2_4", "g3_4", "g4_4")),
    },
    "dim4-29-A4_25-A4_33": {
        "derivation": m(("0", "0", "0", "0"), ("0", "0", "0", "0"), ("0", "0", "0", "0"), ("d1_4", "0", "0", "0")),
        "centroid": m(("h1_1", "0", "0", "0"), ("0", "h1_2", "0", "0"), ("0", "0", "h1_3", "0"), ("0", "0", "0", "h1_4")),
        "quasi-centroid": m(("g1_1", "0", "0", "0"), ("0", "g1_2", "0", "0"), ("g1_3", "0", "g1_3", "0"), ("g1_4", "g2_4", "g3_4", "g4_4")),
    },
    "dim4-30-A4_33-A4_45": {
        "derivation": Z4,
        "centroid": m(("h1_1", "0", "0", "0"), ("h1_2", "h1_2", "0", "0"), ("h1_3", "h2_3", "h1_3", "0"), ("h1_4", "h2_4", "h3_4", "h1_4")),
        "quasi-centroid": m(("g1_1", "0", "0", "0"), ("g1_2", "g1_2", "0", "0"), ("g1_3", "g2_3", "g1_3", "0"), ("g1_4", "g2_4", "g3_4", "g4_4")),
    },
    "dim4-31-A4_37-A4_39": {
        "derivation": m(("0", "0", "0", "0"), ("0", "d2_2", "0", "0"), ("0", "0", "2*d2_3", "0"), ("d1_4", "0", "0", "3*d2_4")),
        "centroid": m(("h1_1", "0", "0", "0"), ("0", "h1_2", "0", "0"), ("0", "0", "h1_3", "0"), ("0", "0", "0", "h1_4")),
        "quasi-centroid": m(("g1_1", "0", "0", "0"), ("g1_2", "g1_2", "0", "0"), ("g1_3", "g2_3", "g1_3", "0"), ("g1_4", "g2_4", "g3_4", "g4_4")),
    },
    "dim4-32-A4_40-A4_43": {
        "derivation": m(("0", "0", "0", "0"), ("0", "d2_2", "0", "0"), ("0", "d2_3", "d3_3", "0"), ("0", "d2_4", "d3_4", "2*d2_2")),
        "centroid": m(("h1_1", "0", "0", "0"), ("0", "h1_2", "0", "0"), ("0", "0", "h1_3", "0"), ("h1_4", "0", "0", "h1_4")),
        "quasi-centroid": m(("g1_1", "0", "0", "0"), ("0", "g1_2", "0", "0"), ("0", "0", "g1_3", "0"), ("0", "0", "0", "g1_4")),
    },
    "dim4-33-A4_40-A4_44": {
        "derivation": m(("0", "0", "0", "0"), ("0", "d2_2", "0", "0"), ("0", "0", "d3_3", "0"), ("0", "d2_4", "d3_4", "d2_2+d3_4")),
        "centroid": m(("h1_1", "0", "0", "0"), ("0", "h1_2", "0", "0"), ("0", "0", "h1_3", "0"), ("h1_4", "0", "0", "h1_4")),
        "quasi-centroid": m(("g1_1", "0", "0", "0"), ("0", "g1_2", "0", "0"), ("0", "0", "g1_3", "0"), ("g1_4", "0", "0", "g1_4")),
    },
    "dim4-34-A4_40-A4_45": {
        "derivation": m(("0", "0", "0", "0"), ("0", "d2_2", "0", "0"), ("0", "d2_3", "d3_3", "0"), ("0", "d2_4", "2*d2_4", "3*d2_4")),
        "centroid": m(("h1_1", "0", "0", "0"), ("0", "h1_2", "0", "0"), ("0", "0", "h2_3", "0"), ("h1_4", "0", "0", "h1_4")),
        "quasi-centroid": m(("g1_1", "0", "0", "0"), ("0", "g1_2", "0", "0"), ("0", "0", "g1_3", "0"), ("g1_4", "0", "0", "g1_4")),
    },
    "dim4-35-A4_40-A4_46": {
        "derivation": m(("0", "0", "0", "0"), ("0", "d2_2", "0", "0"), ("0", "d2_3", "d3_3", "0"), ("0", "d2_4", "2*d2_4", "2*d2_4")),
        "centroid": m(("h1_1", "0", "0", "0"), ("0", "h1_2", "0", "0"), ("0", "0", "h2_3", "0"), ("0", "h1_4", "0", "h1_4")),
        "quasi-centroid": m(("g1_1", "0", "0", "0"), ("0", "g1_2", "0", "0"), ("0", "0", "g1_3", "0"), ("g1_4", "0", "0", "g1_4")),
    },
    "dim4-36-A4_43-A4_44": {
        "derivation": m(("0", "0", "0", "0"), ("0", "d2_2", "0", "0"), ("0", "0", "d2_3", "0"), ("0", "d2_4", "d2_4", "2*d2_4")),
        "centroid": m(("h4_2", "0", "0", "0"), ("0", "h4_2", "0", "0"), ("0", "0", "h4_3", "0"), ("0", "h1_4", "0", "h1_4")),
        "quasi-centroid": m(("g1_1", "0", "0", "0"), ("0", "g1_2", "0", "0"), ("0", "0", "g1_3", "0"), ("g1_4", "0", "0", "g1_4")),
    },
    "dim4-37-A4_43-A4_45": {
        "derivation": m(("0", "0", "0", "0"), ("0", "d2_2", "0", "0"), ("0", "0", "d2_3", "0"), ("0", "d2_4", "d2_4", "2*d2_4")),
        "centroid": m(("h4_2", "0", "0", "0"), ("0", "h4_2", "0", "0"), ("0", "0", "h4_3", "0"), ("0", "h1_4", "0", "h1_4")),
        "quasi-centroid": m(("g1_1", "0", "0", "0"), ("0", "g1_2", "0", "0"), ("0", "0", "g1_3", "0"), ("g1_4", "0", "0", "g1_4")),
    },
    "dim4-38-A4_43-A4_46": {
        "derivation": m(("0", "0", "0", "0"), ("0", "d2_2", "0", "0"), ("0", "0", "d2_3", "0"), ("0", "d2_4", "d2_4", "2*d2_4")),
        "centroid": m(("h4_2", "0", "0", "0"), ("0", "h4_2", "0", "0"), ("0", "0", "h4_3", "0"), ("0", "h1_4", "0", "h1_4")),
        "quasi-centroid": m(("g1_1", "0", "0", "0"), ("0", "g1_2", "0", "0"), ("0", "0", "g1_3", "0"), ("g1_4", "0", "0", "g1_4")),
    },
    "dim4-39-A4_44-A4_46": {
        "derivation": m(("0", "0", "0", "0"), ("0", "d2_2", "0", "0"), ("0", "0", "d2_3", "0"), ("0", "d2_4", "d2_4", "2*d2_4")),
        "centroid": m(("h4_2", "0", "0", "0"), ("0", "h4_2", "0", "0"), ("0", "0", "h4_3", "0"), ("0", "h1_4", "0", "h1_4")),
        "quasi-centroid": m(("g1_1", "0", "0", "0"), ("0", "g1_2", "0", "0"), ("0", "0", "g1_3", "0"), ("g1_4", "0", "0", "g1_4")),
    },
}

# -- nonlinear operator families (dims 2 and 3 only) --------------------------
# positions 6 and 7 carry swapped chi/xi symbols relative to the definitions,
# so both candidate kinds are recorded for them.

NONLINEAR = {
    "dim2-01-A2_1-A2_4": [
        {"label": "position4", "kinds": ["rota-baxter"], "entries": m(("0", "0"), ("r1_2", "0"))},
        {"label": "position5", "kinds": ["nijenhuis"], "entries": m(("0", "0"), ("0", "n2_2"))},
        {"label": "position6", "kinds": ["averaging", "reynolds"], "entries": m(("s1_1", "0"), ("0", "s2_2"))},
        {"label": "position7", "kinds": ["averaging", "reynolds"], "entries": m(("0", "0"), ("x1_2", "0"))},
    ],
    "dim3-01-A3_1-A3_2": [
        {"label": "position4", "kinds": ["rota-baxter"], "entries": m(("0", "0", "0"), ("r1_2", "r2_2", "r3_2"), ("0", "0", "0"))},
        {"label": "position5", "kinds": ["nijenhuis"], "entries": m(("0", "0", "0"), ("n1_2", "n2_2", "n3_2"), ("0", "0", "n2_3"))},
        {"label": "position6", "kinds": ["averaging", "reynolds"], "entries": m(("s3_1", "0", "0"), ("0", "s3_2", "s3_2"), ("0", "0", "s3_3"))},
        {"label": "position7", "kinds": ["averaging", "reynolds"], "entries": m(("0", "0", "0"), ("x1_2", "x2_2", "x3_2"), ("0", "0", "0"))},
    ],
    "dim3-02-A3_1-A3_11": [
        {"label": "position4", "kinds": ["rota-baxter"], "entries": m(("0", "0", "0"), ("r1_2", "0", "r3_2"), ("0", "0", "0"))},
        {"label": "position5", "kinds": ["nijenhuis"], "entries": m(("n2_1", "0", "0"), ("0", "n2_2", "0"), ("0", "0", "0"))},
        {"label": "position6", "kinds": ["averaging", "reynolds"], "entries": m(("s3_1", "0", "0"), ("0", "s3_2", "s3_2"), ("0", "0", "s3_3"))},
        {"label": "position7", "kinds": ["averaging", "reynolds"], "entries": m(("0", "0", "x3_1"), ("0", "0", "x3_2"), ("0", "0", "0"))},
    ],
    "dim3-03-A3_10-A3_12": [
        {"label": "position4", "kinds": ["rota-baxter"], "entries": m(("0", "0", "0"), ("r1_2", "0", "r3_2"), ("0", "0", "0"))},
        {"label": "position5", "kinds": ["nijenhuis"], "entries": m(("n2_1/2", "0", "0"), ("n1_2", "n2_2", "0"), ("0", "0", "0"))},
        {"label": "position6", "kinds": ["averaging", "reynolds"], "entries": m(("s3_1", "0", "0"), ("0", "s3_2", "s3_2"), ("0", "0", "s3_3"))},
        {"label": "position7", "kinds": ["averaging", "reynolds"], "entries": m(("x2_1", "0", "x3_1"), ("0", "x2_2", "x3_2"), ("0", "0", "x2_3"))},
    ],
}

PROVENANCE = {
    "dim2": "dimension-2 classification, single pair; automorphism family and nine invariant tables",
    "dim3": "dimension-3 classification; automorphism family and seven invariant tables",
    "dim4": "dimension-4 classification; automorphism family (where displayed) and three invariant tables",
}

NOTES = {
    "dim3-01-A3_1-A3_2": ["centroid table uses b-symbols in two cells as printed"],
    "dim3-02-A3_1-A3_11": ["centroid table uses a b-symbol in one cell as printed"],
    "dim4-04-A4_1-A4_17": ["centroid table uses b-symbols in two cells as printed"],
    "dim4-08-A4_2-A4_10": ["centroid table uses a b-symbol in one cell as printed"],
    "dim4-09-A4_2-A4_16": ["centroid table uses a b-symbol in one cell as printed"],
    "dim4-14-A4_3-A4_17": ["derivation table cell (2,1) printed as '01'; encoded as 0"],
}


def main():
    entries = {}
    names = set(LINEAR) | set(AUT) | set(NONLINEAR)
    for name in sorted(names):
        prefix = name.split("-")[0]
        entries[name] = {
            "provenance": PROVENANCE[prefix] + f"; entry {name}",
            "notes": NOTES.get(name, []),
            "aut": AUT.get(name, []),
            "linear": LINEAR.get(name, {}),
            "nonlinear": NONLINEAR.get(name, []),
        }
    out = os.path.join(os.path.dirname(__file__), "..", "src", "compalg", "data", "expected.json")
    with open(out, "w") as fh:
        json.dump({"entries": entries}, fh, indent=1, sort_keys=True)
        fh.write("\n")
    print(f"wrote expected data for {len(entries)} entries")


if __name__ == "__main__":
    main()
