"""Part catalog for the eight basis amplitudes after n steps from |0,1,0,0>.

Each part fixes the basis state, the end code of the L cluster mask and the
size regimes of both sides. The reference form holds the reference sum for the
part, variable names n, nl, nr, cl, cl1, cl2, cr1, cr2, g, r, and is what
closed_amplitude evaluates. Parts whose written sum leaves the path oracle
carry a Correction per expression and keep the written form for the audit.
The tail names the fraction the derived evaluator uses to cross-check a part
from the counting product alone.
"""
from typing import Dict, List, Tuple

from closed_form.parts import Correction, PartKey, PartSpec, ReferenceForm, Regime

S = Regime.SINGLE
P = Regime.PAIRS
X = Regime.MIXED

TAIL_BY_BASIS = {
    (0, "001"): "last_left_pair",
    (1, "001"): "last_left_long",
    (2, "110"): "positive_multi",
    (2, "101"): "negative_multi",
    (3, "110"): "positive_single",
    (3, "101"): "negative_single",
    (4, "001"): "negative_single",
    (5, "010"): "negative_single",
    (6, "011"): "negative_right_pair",
    (7, "011"): "negative_right_long",
}


def _part(basis, end, left, right, variables=(), sign="0", factors=(), rho="1", note=""):
    key = PartKey(basis, end, left, right)
    form = ReferenceForm(tuple(variables), sign, tuple(factors), rho, note)
    return PartSpec(key, TAIL_BY_BASIS[(basis, end)], form)


def _v(name, low, high):
    return (name, low, high)


# shared bounds
CL2_LEFT = _v("cl2", "max(0, 3*cl - 2*cl1 - nl)", "cl - cl1 - 1")
CR2_EQUAL = _v("cr2", "max(0, 3*cl - 2*cr1 - nr)", "cl - cr1 - 1")
CR2_ONE_MORE = _v("cr2", "max(0, 3*cl - 2*cr1 - nr + 3)", "cl - cr1")

G_LEFT_001 = _v("g", "2 - delta(cl1, 0)", "2*min(cl1, cl - cl1) + pos(cl - 2*cl1)")
G_PAIRS_001 = _v("g", "2 - delta(2*cl, nl)", "2*min(2*cl - nl, nl - cl) + pos(2*nl - 3*cl)")
G_PAIRS_110 = _v("g", "2", "2*min(2*cl - nl - 1, nl - cl) + pos(3*cl - 2*nl - 1)")
G_LEFT_110 = _v("g", "2", "2*min(cl1 - 1, cl - cl1) + pos(2*cl1 - cl - 1)")
G_PAIRS_101 = _v("g", "2 - delta(2*cl, nl + 1)", "2*min(2*cl - nl - 1, nl - cl) + pos(2*nl - 3*cl + 1)")
G_LEFT_101 = _v("g", "2 - delta(cl1, 1)", "2*min(cl1 - 1, cl - cl1) + pos(cl - 2*cl1 + 1)")
G_PAIRS_010 = _v("g", "2", "2*min(2*cl - nl, nl - cl) + pos(3*cl - 2*nl)")
G_LEFT_010 = _v("g", "2", "2*min(cl1, cl - cl1) + pos(2*cl1 - cl)")
G_PAIRS_011 = _v("g", "2 - delta(2*cl, nl)", "2*min(2*cl - nl, nl - cl) + 1 - delta(2*cl - nl, nl - cl)")
G_LEFT_011 = _v("g", "2 - delta(cl1, 0)", "2*min(cl1, cl - cl1) + 1 - delta(cl1, cl - cl1)")

R_PAIRS_NEG = _v("r", "max(0, cl - nr + g - 1)", "min(2*cl - nr - 1, g - 1)")
R_MIXED_NEG = _v("r", "max(0, cr1 - cl + g - 1)", "min(cr1 - 1, g - 1)")
R_PAIRS_POS = _v("r", "max(0, cl - nr + g)", "min(2*cl - nr - 1, g)")
R_MIXED_POS = _v("r", "max(0, cr1 - cl + g)", "min(cr1 - 1, g)")
R_PAIRS_MORE = _v("r", "max(0, cl - nr + g)", "min(2*cl - nr + 1, g - 1)")
R_MIXED_MORE = _v("r", "max(0, cr1 - cl + g - 2)", "min(cr1 - 1, g - 1)")

RHO_2_NEG = "frac(cl - cr1 - g + r + 1, cl - g)"
RHO_6 = "frac((cl - cr1 - g + r + 2) * cr2, (cl - g + 1) * (cl - cr1 + 1))"
RHO_7 = "frac((cl - cr1 - g + r + 2) * (cl - cr1 - cr2 + 1), (cl - g + 1) * (cl - cr1 + 1))"

_BASIS_0 = [
    _part(0, "001", P, S,
          [_v("g", "2 - delta(2*nr, nl)", "2*min(2*nr - nl, nl - nr) + pos(2*nl - 3*nr)")],
          "g - 1",
          ["ind(ceil_half(nl), nl - 1, nr)", "gperm(2*nr - nl, nl - nr, g, '01')"]),
    _part(0, "001", X, S,
          [_v("cl1", "max(0, 2*nr - nl + 1)", "nr - 2"),
           _v("cl2", "max(1, 3*nr - 2*cl1 - nl)", "nr - cl1 - 1"),
           _v("g", "2 - delta(cl1, 0)", "2*min(cl1, nr - cl1) + pos(nr - 2*cl1)")],
          "n + cl2 + g - 1",
          ["ind(2, nl - 3, nr)", "gperm(cl1, nr - cl1, g, '01')", "comp(nl - cl1, nr - cl1, cl2)"],
          "frac(cl2, nr - cl1)",
          "written cl2 bracket is malformed; read as [max(1, 3nr-2cl1-nl), nr-cl1-1]"),
    _part(0, "001", P, P,
          [_v("cl", "ceil_half(max(nl, nr + 1))", "min(nl, nr) - 1"), G_PAIRS_001, R_PAIRS_NEG],
          "r",
          ["gperm(2*cl - nl, nl - cl, g, '01')", "place(cl - 1, 2*cl - nr - 1, g - 1, r)"]),
    _part(0, "001", X, P,
          [_v("cl", "1 + floor_half(nr)", "min(nr, nl - 2) - 1"),
           _v("cl1", "max(0, 2*cl - nl + 1)", "cl - 2"),
           _v("cl2", "max(1, 3*cl - 2*cl1 - nl)", "cl - cl1 - 1"),
           G_LEFT_001, R_PAIRS_NEG],
          "cl2 + nl - cl + r",
          ["gperm(cl1, cl - cl1, g, '01')", "place(cl - 1, 2*cl - nr - 1, g - 1, r)",
           "comp(nl - cl1, cl - cl1, cl2)"],
          "frac(cl2, cl - cl1)"),
    _part(0, "001", P, X,
          [_v("cl", "max(2, ceil_half(nl))", "min(nl, nr - 1) - 1"),
           _v("cr1", "max(1, 2*cl - nr + 1)", "cl - 1"),
           CR2_EQUAL, G_PAIRS_001, R_MIXED_NEG],
          "nr - cl + cr2 + r",
          ["gperm(2*cl - cl, nl - cl, g, '01')", "place(cl - 1, cr1 - 1, g - 1, r)",
           "comp(nr - cr1, cl - cr1, cr2)"],
          note="first mask argument written as 2cl - cl").corrected(
        Correction("gperm(2*cl - cl, nl - cl, g, '01')", "gperm(2*cl - nl, nl - cl, g, '01')",
                   "size-one L clusters are 2cl - nl in the pairs regime")),
    _part(0, "001", X, X,
          [_v("cl", "2", "min(nl - 1, nr) - 2"),
           _v("cl1", "max(0, 2*cl - nl + 1)", "cl - 2"),
           _v("cl2", "max(1, 3*cl - 2*cl1 - nl)", "cl - cl1 - 1"),
           _v("cr1", "max(0, 2*cl - nr + 1)", "cl - 1"),
           CR2_EQUAL, G_LEFT_001, R_MIXED_NEG],
          "n + cl2 + cr2 + r",
          ["gperm(cl1, cl - cl1, g, '01')", "place(cl - 1, cr1 - 1, g - 1, r)",
           "comp(nl - cl1, cl - cl1, cl2)", "comp(nr - cr1, cl - cr1, cr2)"],
          "frac(cl2, cl - cl1)"),
]

_BASIS_1 = [
    _part(1, "001", X, S,
          [_v("cl1", "max(0, 2*nr - nl + 1)", "nr - 1"),
           _v("cl2", "max(0, 3*nr - 2*cl1 - nl)", "nr - cl1 - 1"),
           _v("g", "2 - delta(cl1, 0)", "2*min(cl1, nr - cl1) + pos(nr - 2*cl1)")],
          "n + cl2 + g - 1",
          ["gperm(cl1, nr - cl1, g, '01')", "comp(nl - cl1, nr - cl1, cl2)"],
          "frac(nr - cl1 - cl2, nr - cl1)"),
    _part(1, "001", X, P,
          [_v("cl", "1 + floor_half(nr)", "min(nr, nl - 1) - 1"),
           _v("cl1", "max(0, 2*cl - nl + 1)", "cl - 1"),
           CL2_LEFT, G_LEFT_001, R_PAIRS_NEG],
          "cl2 + nl - cl + r",
          ["gperm(cl1, cl - cl1, g, '01')", "place(cl - 1, 2*cl - nr - 1, g - 1, r)",
           "comp(nl - cl1, cl - cl1, cl2)"],
          "frac(cl - cl1 - cl2, cl - cl1)",
          "running text gives the lower cl bound as 1 - floor(nr/2); the summation range uses 1 + floor(nr/2)"),
    _part(1, "001", X, X,
          [_v("cl", "2", "min(nl, nr) - 2"),
           _v("cl1", "max(0, 2*cl - nl + 1)", "cl - 1"),
           CL2_LEFT,
           _v("cr1", "max(1, 2*cl - nr + 1)", "cl - 1"),
           CR2_EQUAL, G_LEFT_001, R_MIXED_NEG],
          "n + cl2 + cr2 + r",
          ["gperm(cl1, cl - cl1, g, '01')", "place(cl - 1, cr1 - 1, g - 1, r)",
           "comp(nl - cl1, cl - cl1, cl2)", "comp(nr - cr1, cl - cr1, cr2)"],
          "frac(cl - cl1 - cl2, cl - cl1)"),
]

_BASIS_2 = [
    _part(2, "110", S, P, (), "0",
          ["ind(1 + floor_half(nr), nr - 1, nl)", "binom(nl - 2, 2*nl - nr - 1)"]),
    _part(2, "110", S, X,
          [_v("cr1", "max(1, 2*nl - nr + 1)", "nl - 1"),
           _v("cr2", "max(0, 3*nl - 2*cr1 - nr)", "nl - cr1 - 1")],
          "n + cr2",
          ["comp(nr - cr1, nl - cr1, cr2)", "binom(nl - 2, cr1 - 1)"]),
    _part(2, "110", P, P,
          [_v("cl", "max(ceil_half(nl), floor_half(nr)) + 1", "min(nl, nr) - 1"), G_PAIRS_110, R_PAIRS_POS],
          "r",
          ["gperm(2*cl - nl - 1, nl - cl, g, '10')", "place(cl - 1, 2*cl - nr - 1, g, r)"],
          "frac(g - r, g)"),
    _part(2, "110", P, X,
          [_v("cl", "1 + ceil_half(nl)", "min(nl, nr - 1) - 1"),
           _v("cr1", "max(1, 2*cl - nr + 1)", "cl - 1"),
           CR2_EQUAL, G_PAIRS_110, R_MIXED_POS],
          "nr - cl + cr2 + r",
          ["gperm(2*cl - nl - 1, nl - cl, g, '10')", "place(cl - 1, cr1 - 1, g, r)",
           "comp(nr - cr1, cl - cr1, cr2)"],
          "frac(g - r, g)"),
    _part(2, "110", X, P,
          [_v("cl", "1 + floor_half(nr)", "min(nr, nl - 1) - 1"),
           _v("cl1", "max(2, 2*cl - nl + 1)", "cl - 1"),
           CL2_LEFT, G_LEFT_110, R_PAIRS_POS],
          "cl2 + nl - cl + r",
          ["gperm(cl1 - 1, cl - cl1, g, '10')", "place(cl - 1, 2*cl - nr - 1, g, r)",
           "comp(nl - cl1, cl - cl1, cl2)"],
          "frac(g - r, g)"),
    _part(2, "110", X, X,
          [_v("cl", "2", "min(nl, nr) - 2"),
           _v("cl1", "max(1, 2*cl - nl + 1)", "cl - 1"),
           CL2_LEFT,
           _v("cr1", "max(1, 2*cl - nr + 1)", "cl - 1"),
           CR2_EQUAL,
           _v("g", "2", "2*min(cl1, cl - cl1) + pos(2*cl1 - cl - 1)"),
           R_MIXED_POS],
          "n + cl2 + cr2 + r",
          ["gperm(cl1 - 1, cl - cl1, g, '10')", "place(cl - 1, cr1 - 1, g, r)",
           "comp(nl - cl1, cl - cl1, cl2)", "comp(nr - cr1, cl - cr1, cr2)"],
          "frac(g - r, g)",
          "upper g bound written with min(cl1, ...) where the other 110 parts use cl1 - 1").corrected(
        Correction("2*min(cl1, cl - cl1) + pos(2*cl1 - cl - 1)", "2*min(cl1 - 1, cl - cl1) + pos(2*cl1 - cl - 1)",
                   "the last L cluster is marginal, so only cl1 - 1 singulars alternate")),
    _part(2, "101", P, P,
          [_v("cl", "floor_half(max(nl, nr)) + 1", "min(nl, nr) - 1"), G_PAIRS_101, R_PAIRS_NEG],
          "r",
          ["gperm(2*cl - nl - 1, nl - cl, g, '01')", "place(cl - 1, 2*cl - nr - 1, g - 1, r)"],
          "frac(nr - cl - g + r + 1, cl - g)"),
    _part(2, "101", P, X,
          [_v("cl", "1 + floor_half(nl)", "min(nl, nr - 1) - 1"),
           _v("cr1", "max(1, 2*cl - nr + 1)", "cl - 1"),
           CR2_EQUAL, G_PAIRS_101, R_MIXED_NEG],
          "nr - cl + cr2 + r",
          ["gperm(2*cl - nl - 1, nl - cl, g, '01')", "place(cl - 1, cr1 - 1, g - 1, r)",
           "comp(nr - cr1, cl - cr1, cr2)"],
          RHO_2_NEG),
    _part(2, "101", X, P,
          [_v("cl", "1 + floor_half(nr)", "min(nr, nl - 1) - 1"),
           _v("cl1", "max(1, 2*cl - nl + 1)", "cl - 1"),
           CL2_LEFT, G_LEFT_101, R_PAIRS_NEG],
          "cl2 + nl - cl + r",
          ["gperm(cl1 - 1, cl - cl1, g, '01')", "place(cl - 1, 2*cl - nr - 1, g - 1, r)",
           "comp(nl - cl1, cl - cl1, cl2)"],
          "frac(nr - cl - g + r + 1, cl - g)"),
    _part(2, "101", X, X,
          [_v("cl", "2", "min(nl, nr) - 2"),
           _v("cl1", "max(1, 2*cl - nl + 1)", "cl - 1"),
           CL2_LEFT,
           _v("cr1", "max(1, 2*cl - nr + 1)", "cl - 1"),
           CR2_EQUAL, G_LEFT_101, R_MIXED_NEG],
          "n + cl2 + cr2 + r",
          ["gperm(cl1 - 1, cl - cl1, g, '01')", "place(cl - 1, cr1 - 1, g - 1, r)",
           "comp(nl - cl1, cl - cl1, cl2)", "comp(nr - cr1, cl - cr1, cr2)"],
          RHO_2_NEG),
]

_BASIS_3 = [
    _part(3, "110", S, S, (), "1", ["delta(nl, nr)"]),
    _part(3, "110", S, P, (), "1",
          ["ind(1 + ceil_half(nr), nr - 1, nl)", "binom(nl - 2, 2*nl - nr - 2)"]),
    _part(3, "110", P, S,
          [_v("g", "2", "2*min(2*nr - nl - 1, nl - nr) + pos(3*nr - 2*nl - 1)")],
          "g",
          ["ind(1 + ceil_half(nl), nl - 1, nr)", "gperm(2*nr - nl - 1, nl - nr, g, '10')"]),
    _part(3, "110", S, X,
          [_v("cr1", "max(2, 2*nl - nr + 1)", "nl - 1"),
           _v("cr2", "max(0, 3*nl - 2*cr1 - nr)", "nl - cr1 - 1")],
          "n + cr2 + 1",
          ["comp(nr - cr1, nl - cr1, cr2)", "binom(nl - 2, cr1 - 2)"]),
    _part(3, "110", X, S,
          [_v("cl1", "max(2, 2*nr - nl + 1)", "nr - 1"),
           _v("cl2", "max(0, 3*nr - 2*cl1 - nl)", "nr - cl1 - 1"),
           _v("g", "2", "2*min(cl1 - 1, nr - cl1) + pos(2*cl1 - nr - 1)")],
          "n + cl2 + g",
          ["gperm(cl1 - 1, nr - cl1, g, '10')", "comp(nl - cl1, nr - cl1, cl2)"]),
    _part(3, "110", P, P,
          [_v("cl", "ceil_half(max(nl, nr)) + 1", "min(nl, nr) - 1"), G_PAIRS_110, R_PAIRS_POS],
          "r",
          ["gperm(2*cl - nl - 1, nl - cl, g, '10')", "place(cl - 1, 2*cl - nr - 1, g, r)"],
          "frac(r, g)"),
    _part(3, "110", P, X,
          [_v("cl", "1 + ceil_half(nl)", "min(nl, nr - 1) - 1"),
           _v("cr1", "max(2, 2*cl - nr + 1)", "cl - 1"),
           CR2_EQUAL, G_PAIRS_110, R_MIXED_POS],
          "nr - cl + cr2 + r",
          ["gperm(2*cl - nl - 1, nl - cl, g, '10')", "place(cl - 1, cr1 - 1, g, r)",
           "comp(nr - cr1, cl - cr1, cr2)"],
          "frac(r, g)",
          "running text omits the -1 on the upper cl bound; the summation range has it"),
    _part(3, "110", X, P,
          [_v("cl", "1 + ceil_half(nr)", "min(nl - 1, nr) - 1"),
           _v("cl1", "max(2, 2*cl - nl + 1)", "cl - 1"),
           CL2_LEFT, G_LEFT_110, R_PAIRS_POS],
          "cl2 + nl - cl + r",
          ["gperm(cl1 - 1, cl - cl1, g, '10')", "place(cl - 1, 2*cl - nr - 1, g, r)",
           "comp(nl - cl1, cl - cl1, cl2)"],
          "frac(r, g)"),
    _part(3, "110", X, X,
          [_v("cl", "3", "min(nl, nr) - 2"),
           _v("cl1", "max(2, 2*cl - nl + 1)", "cl - 1"),
           CL2_LEFT,
           _v("cr1", "max(2, 2*cl - nr + 1)", "cl - 1"),
           CR2_EQUAL, G_LEFT_110, R_MIXED_POS],
          "n + cl2 + cr2 + r",
          ["gperm(cl1 - 1, cl - cl1, g, '10')", "place(cl - 1, cr1 - 1, g, r)",
           "comp(nl - cl1, cl - cl1, cl2)", "comp(nr - cr1, cl - cr1, cr2)"],
          "frac(r, g)"),
    _part(3, "101", P, S,
          [_v("g", "2 - delta(2*nr, nl + 1)", "2*min(2*nr - nl - 1, nl - nr) + pos(2*nl - 3*nr + 1)")],
          "g - 1",
          ["ind(1 + floor_half(nl), nl - 1, nr)", "gperm(2*nr - nl - 1, nl - nr, g, '01')"]),
    _part(3, "101", X, S,
          [_v("cl1", "max(1, 2*nr - nl + 1)", "nr - 1"),
           _v("cl2", "max(0, 3*nr - 2*cl1 - nl)", "nr - cl1 - 1"),
           _v("g", "2 - delta(cl1, 1)", "2*min(cl1 - 1, nr - cl1) + pos(nr - 2*cl1 + 1)")],
          "n + cl2 + g - 1",
          ["gperm(cl1 - 1, nr - cl1, g, '01')", "comp(nl - cl1, nr - cl1, cl2)"]),
    _part(3, "101", P, P,
          [_v("cl", "max(floor_half(nl), ceil_half(nr)) + 1", "min(nl, nr) - 1"), G_PAIRS_101, R_PAIRS_NEG],
          "r",
          ["gperm(2*cl - nl - 1, nl - cl, g, '01')", "place(cl - 1, 2*cl - nr - 1, g - 1, r)"],
          "frac(2*cl - nr - r - 1, cl - g)"),
    _part(3, "101", X, P,
          [_v("cl", "1 + ceil_half(nr)", "min(nr, nl - 1) - 1"),
           _v("cl1", "max(1, 2*cl - nl + 1)", "cl - 1"),
           CL2_LEFT,
           _v("g", "2 - delta(cl1, 0)", "2*min(cl1 - 1, cl - cl1) + pos(cl - 2*cl1 + 1)"),
           R_PAIRS_NEG],
          "cl2 + nl - cl + r",
          ["gperm(cl1 - 1, cl - cl1, g, '01')", "place(cl - 1, 2*cl - nr - 1, g, r)",
           "comp(nl - cl1, cl - cl1, cl2)"],
          "frac(2*cl - nr - r - 1, cl - g)",
          "lower g bound written with delta(cl1, 0) and the slot symbol with g rather than g - 1").corrected(
        Correction("2 - delta(cl1, 0)", "2 - delta(cl1, 1)", "one group when the marginal is the only singular"),
        Correction("place(cl - 1, 2*cl - nr - 1, g, r)", "place(cl - 1, 2*cl - nr - 1, g - 1, r)",
                   "101 ends have g - 1 positive places")),
    _part(3, "101", P, X,
          [_v("cl", "max(3, floor_half(nl) + 1)", "min(nl, nr - 1) - 1"),
           _v("cr1", "max(2, 2*cl - nr + 1)", "cl - 1"),
           CR2_EQUAL, G_PAIRS_101, R_MIXED_NEG],
          "nr - cl + cr2 + r",
          ["gperm(2*cl - nl - 1, nl - cl, g, '01')", "place(cl - 1, cr1 - 1, g - 1, r)",
           "comp(nr - cr1, cl - cr1, cr2)"],
          "frac(cr1 - r - 1, cl - g)"),
    _part(3, "101", X, X,
          [_v("cl", "3", "min(nl, nr) - 2"),
           _v("cl1", "max(1, 2*cl - nl + 1)", "cl - 1"),
           CL2_LEFT,
           _v("cr1", "max(2, 2*cl - nr + 1)", "cl - 1"),
           CR2_EQUAL, G_LEFT_101, R_MIXED_NEG],
          "n + cl2 + cr2 + r",
          ["gperm(cl1 - 1, cl - cl1, g, '01')", "place(cl - 1, cr1 - 1, g - 1, r)",
           "comp(nl - cl1, cl - cl1, cl2)", "comp(nr - cr1, cl - cr1, cr2)"],
          "frac(cr1 - r - 1, cl - g)"),
]

_BASIS_4 = [
    _part(4, "001", P, S,
          [_v("g", "2 - delta(2*nr, nl + 2)", "2*min(2*nr - nl - 2, nl - nr + 1) + pos(2*nl - 3*nr + 3)")],
          "g - 1",
          ["ind(ceil_half(nl) + 1, nl, nr)", "gperm(2*nr - nl - 2, nl - nr + 1, g, '01')"]),
    _part(4, "001", X, S,
          [_v("cl1", "max(0, 2*nr - nl - 1)", "nr - 2"),
           _v("cl2", "max(0, 3*nr - 2*cl1 - nl - 3)", "nr - cl1 - 2"),
           _v("g", "2 - delta(cl1, 0)", "2*min(cl1, nr - cl1 - 1) + pos(nr - 2*cl1 - 1)")],
          "n + cl2 + g",
          ["gperm(cl1, nr - cl1 - 1, g, '01')", "comp(nl - cl1, nr - cl1 - 1, cl2)"]),
    _part(4, "001", P, P,
          [_v("cl", "ceil_half(max(nl, nr))", "min(nl, nr - 1) - 1"), G_PAIRS_001, R_PAIRS_MORE],
          "r",
          ["gperm(2*cl - nl, nl - cl, g, '01')", "place(cl, 2*cl - nr + 1, g - 1, r)"],
          "frac(2*cl - nr - r + 1, cl - g + 1)"),
    _part(4, "001", X, P,
          [_v("cl", "ceil_half(nr)", "min(nl, nr) - 2"),
           _v("cl1", "max(0, 2*cl - nl + 1)", "cl - 1"),
           CL2_LEFT, G_LEFT_001, R_PAIRS_MORE],
          "cl2 + nl - cl + r",
          ["gperm(cl1, cl - cl1, g, '01')", "place(cl, 2*cl - nr + 1, g - 1, r)",
           "comp(nl - cl1, cl - cl1, cl2)"],
          "frac(2*cl - nr - r + 1, cl - g + 1)"),
    _part(4, "001", P, X,
          [_v("cl", "max(2, ceil_half(nl))", "min(nl, nr - 2) - 1"),
           _v("cr1", "max(2, 2*cl - nr + 3)", "cl"),
           CR2_ONE_MORE, G_PAIRS_001, R_MIXED_MORE],
          "nr - cl + cr2 + r + 1",
          ["gperm(2*cl - nl, nl - cl, g, '01')", "place(cl, cr1 - 1, g - 1, r)",
           "comp(nr - cr1, cl - cr1 + 1, cr2)"],
          "frac(cr1 - r - 1, cl - g + 1)"),
    _part(4, "001", X, X,
          [_v("cl", "2", "min(nl - 2, nr - 3)"),
           _v("cl1", "max(0, 2*cl - nl + 1)", "cl - 1"),
           CL2_LEFT,
           _v("cr1", "max(2, 2*cl - nr + 3)", "cl"),
           CR2_ONE_MORE, G_LEFT_001, R_MIXED_MORE],
          "n + cl2 + cr2 + r + 1",
          ["gperm(cl1, cl - cl1, g, '01')", "place(cl, cr1 - 1, g - 1, r)",
           "comp(nl - cl1, cl - cl1, cl2)", "comp(nr - cr1, cl - cr1, cr2)"],
          "frac(cr1 - r - 1, cl - g + 1)",
          "last size symbol written with cl - cr1 where the sibling part has cl - cr1 + 1").corrected(
        Correction("comp(nr - cr1, cl - cr1, cr2)", "comp(nr - cr1, cl - cr1 + 1, cr2)",
                   "there are cl + 1 R clusters")),
]

_BASIS_5 = [
    _part(5, "010", S, S, (), "0", ["delta(nl, nr - 1)"]),
    _part(5, "010", S, P, (), "0",
          ["ind(ceil_half(nr), nr - 2, nl)", "binom(nl, 2*nl - nr + 1)"],
          "frac(2*nl - nr + 1, nl)",
          "running text places nl + 1 in [1 + ceil(nr/2), nr - 1]; the indicator uses [ceil(nr/2), nr - 2]"),
    _part(5, "010", P, S,
          [_v("g", "2", "2*min(2*nr - nl - 2, nl - nr + 1) + pos(3*nr - 2*nl - 3)")],
          "g - 1",
          ["ind(2 + floor_half(nl), nl, nr)", "gperm(2*nr - nl - 2, nl - nr + 1, g, '10')"]),
    _part(5, "010", S, X,
          [_v("cr1", "max(2, 2*nl - nr + 3)", "nl"),
           _v("cr2", "max(0, 3*nl - 2*cr1 - nr + 3)", "nl - cr1")],
          "n + cr2 + 1",
          ["comp(nr - cr1, nl - cr1 + 1, cr2)", "binom(nl, cr1 - 1)"],
          "frac(cr1 - 1, nl)"),
    _part(5, "010", X, S,
          [_v("cl1", "max(1, 2*nr - nl + 1)", "nr - 2"),
           _v("cl2", "max(0, 3*nr - 2*cl1 - nl - 3)", "nr - cl1 - 2"),
           _v("g", "2", "2*min(cl1, nr - cl1 - 1) + pos(2*cl1 - nr + 1)")],
          "n + cl2 + g",
          ["gperm(cl1, nr - cl1 - 1, g, '10')", "comp(nl - cl1, nr - cl1 - 1, cl2)"],
          note="lower cl1 bound written as 2nr - nl + 1 where the cluster counts give 2nr - nl - 1").corrected(
        Correction("max(1, 2*nr - nl + 1)", "max(1, 2*nr - nl - 1)", "cl = nr - 1 L clusters")),
    _part(5, "010", P, P,
          [_v("cl", "ceil_half(max(nl + 1, nr))", "min(nl, nr - 1) - 1"), G_PAIRS_010, R_PAIRS_MORE],
          "r",
          ["gperm(2*cl - nl, nl - cl, g, '10')", "place(cl, 2*cl - nr + 1, g - 1, r)"],
          "frac(2*cl - nr - r + 1, cl - g + 1)"),
    _part(5, "010", P, X,
          [_v("cl", "1 + floor_half(nl)", "min(nl, nr - 2) - 1"),
           _v("cr1", "max(2, 2*cl - nr + 3)", "cl"),
           CR2_ONE_MORE, G_PAIRS_010, R_MIXED_MORE],
          "nr - cl + cr2 + r + 1",
          ["gperm(2*cl - nl, nl - cl, g, '10')", "place(cl, cr1 - 1, g - 1, r)",
           "comp(nr - cr1, cl - cr1 + 1, cr2)"],
          "frac(cr1 - r - 1, cl - g + 1)"),
    _part(5, "010", X, P,
          [_v("cl", "ceil_half(nr)", "min(nl, nr) - 2"),
           _v("cl1", "max(1, 2*cl - nl + 1)", "cl - 1"),
           CL2_LEFT, G_LEFT_010, R_PAIRS_MORE],
          "cl2 + nl - cl + r",
          ["gperm(cl1, cl - cl1, g, '10')", "place(cl, 2*cl - nr + 1, g - 1, r)",
           "comp(nl - cl1, cl - cl1, cl2)"],
          "frac(2*cl - nr - r + 1, cl - g + 1)"),
    _part(5, "010", X, X,
          [_v("cl", "2", "min(nl, nr - 1) - 2"),
           _v("cl1", "max(1, 2*cl - nl + 1)", "cl - 1"),
           CL2_LEFT,
           _v("cr1", "max(2, 2*cl - nr + 3)", "cl"),
           CR2_ONE_MORE, G_LEFT_010, R_MIXED_MORE],
          "n + cl2 + cr2 + r + 1",
          ["gperm(cl1, cl - cl1, g, '10')", "place(cl, cr1 - 1, g - 1, r)",
           "comp(nl - cl1, cl - cl1, cl2)", "comp(nr - cr1, cl - cr1 + 1, cr2)"],
          "frac(cr1 - r - 1, cl - g + 1)"),
]

_BASIS_6 = [
    _part(6, "011", S, P, (), "0",
          ["ind(floor_half(nr), nr - 2, nl)", "binom(nl, 2*nl - nr + 1)"],
          "frac(nr - nl - 1, nl)"),
    _part(6, "011", S, X,
          [_v("cr1", "max(1, 2*nl - nr + 3)", "nl - 1"),
           _v("cr2", "max(1, 3*nl - 2*cr1 - nr + 3)", "nl - cr1")],
          "n + cr2 + 1",
          ["comp(nr - cr1, nl - cr1 + 1, cr2)", "binom(nl, cr1 - 1)"],
          "frac(cr2, nl)"),
    _part(6, "011", P, P,
          [_v("cl", "max(ceil_half(nl), floor_half(nr))", "min(nl, nr - 1) - 1"),
           G_PAIRS_011,
           _v("r", "max(0, cl - nr + g + 1)", "min(2*cl - nr + 1, g - 1)")],
          "r",
          ["gperm(2*cl - nl, nl - cl, g, '11')", "place(cl, 2*cl - nr + 1, g - 1, r)"],
          "frac(nr - cl - g + r, cl - g + 1)",
          "upper g bound written as 1 - delta(...) in place of the indicator terms"),
    _part(6, "011", P, X,
          [_v("cl", "max(2, ceil_half(nl))", "min(nl, nr - 3) - 1"),
           _v("cr1", "max(1, 2*cl - nr + 3)", "cl - 1"),
           _v("cr2", "max(1, 3*cl - 2*cr1 - nr + 3)", "cl - cr1"),
           G_PAIRS_011, R_MIXED_MORE],
          "nr - cl + cr2 + r + 1",
          ["gperm(2*cl - nl, nl - cl, g, '11')", "place(cl, cr1 - 1, g - 1, r)",
           "comp(nr - cr1, cl - cr1 + 1, cr2)"],
          RHO_6),
    _part(6, "011", X, P,
          [_v("cl", "floor_half(nr)", "min(nl, nr) - 2"),
           _v("cl1", "max(0, 2*cl - nl + 1)", "cl - 1"),
           CL2_LEFT, G_LEFT_011, R_PAIRS_MORE],
          "cl2 + nl - cl + r",
          ["gperm(cl1, cl - cl1, g, '11')", "place(cl, 2*cl - nr + 1, g - 1, r)",
           "comp(nl - cl1, cl - cl1, cl2)"],
          "frac(nr - cl - g + r, cl - g + 1)"),
    _part(6, "011", X, X,
          [_v("cl", "2", "min(nl, nr - 2) - 2"),
           _v("cl1", "max(0, 2*cl - nl + 1)", "cl - 1"),
           CL2_LEFT,
           _v("cr1", "max(1, 2*cl - nr + 3)", "cl - 1"),
           _v("cr2", "max(1, 3*cl - 2*cr1 - nr + 3)", "cl - cr1"),
           G_LEFT_011, R_MIXED_MORE],
          "n + cl2 + cr2 + r + 1",
          ["gperm(cl1, cl - cl1, g, '11')", "place(cl, cr1 - 1, g - 1, r)",
           "comp(nl - cl1, cl - cl1, cl2)", "comp(nr - cr1, cl - cr1 + 1, cr2)"],
          RHO_6),
]

_BASIS_7 = [
    _part(7, "011", S, X,
          [_v("cr1", "max(1, 2*nl - nr + 3)", "nl"),
           _v("cr2", "max(0, 3*nl - 2*cr1 - nr + 3)", "nl - cr1")],
          "n + cr2 + 1",
          ["comp(nr - cr1, nl - cr1 + 1, cr2)", "binom(nl, cr1 - 1)"],
          "frac(nl - cr1 - cr2 + 1, nl)"),
    _part(7, "011", P, X,
          [_v("cl", "ceil_half(nl)", "min(nl, nr - 2) - 1"),
           _v("cr1", "max(1, 2*cl - nr + 3)", "cl"),
           CR2_ONE_MORE, G_PAIRS_011, R_MIXED_MORE],
          "nr - cl + cr2 + r + 1",
          ["gperm(2*cl - nl, nl - cl, g, '11')", "place(cl, cr1 - 1, g - 1, r)",
           "comp(nr - cr1, cl - cr1 + 1, cr2)"],
          RHO_7),
    _part(7, "011", X, X,
          [_v("cl", "1", "min(nl, nr - 1) - 2"),
           _v("cl1", "max(0, 2*cl - nl + 1)", "cl - 1"),
           CL2_LEFT,
           _v("cr1", "max(1, 2*cl - nr + 3)", "cl"),
           CR2_ONE_MORE, G_LEFT_011, R_MIXED_MORE],
          "n + cl2 + cr2 + r + 1",
          ["gperm(cl1, cl - cl1, g, '11')", "place(cl, cr1 - 1, g - 1, r)",
           "comp(nl - cl1, cl - cl1, cl2)", "comp(nr - cr1, cl - cr1 + 1, cr2)"],
          RHO_7),
]

PARTS: Tuple[PartSpec, ...] = tuple(
    _BASIS_0 + _BASIS_1 + _BASIS_2 + _BASIS_3 + _BASIS_4 + _BASIS_5 + _BASIS_6 + _BASIS_7
)


def parts_by_basis(parts=PARTS) -> Dict[int, List[PartSpec]]:
    grouped: Dict[int, List[PartSpec]] = {j: [] for j in range(8)}
    for part in parts:
        grouped[part.key.basis].append(part)
    return grouped


def find_part(name: str, parts=PARTS) -> PartSpec:
    key = PartKey.parse(name)
    for part in parts:
        if part.key == key:
            return part
    raise KeyError(f"no part {name}")


def replace_part(parts, new: PartSpec) -> Tuple[PartSpec, ...]:
    """Catalog copy with the part sharing new's key swapped out."""
    if not any(p.key == new.key for p in parts):
        raise KeyError(f"no part {new.key}")
    return tuple(new if p.key == new.key else p for p in parts)
