"""Evaluator for the reference part sums held in ReferenceForm."""
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterator, Optional, Tuple

from closed_form.parts import FormulaDefect, PartSpec, ReferenceForm
from clusters.symbols import (
    binom,
    ceil_half,
    comp_count,
    delta,
    floor_half,
    group_perm_count_literal,
    in_range,
    indicator_positive,
    placement_count,
)

NAMESPACE = {
    "__builtins__": {},
    "max": max,
    "min": min,
    "binom": binom,
    "gperm": group_perm_count_literal,
    "comp": comp_count,
    "place": placement_count,
    "delta": delta,
    "pos": indicator_positive,
    "ind": in_range,
    "ceil_half": ceil_half,
    "floor_half": floor_half,
    "frac": Fraction,
}


def walk_counts(n: int, k: int) -> Optional[Tuple[int, int]]:
    """(L moves, R moves) of the paths reaching k, prefix included; None off support."""
    if n < 0 or abs(k) > n or (n - k) % 2:
        return None
    return (n - k) // 2 + 1, (n + k) // 2 + 1


@lru_cache(maxsize=None)
def _compiled(expr: str):
    return compile(expr, "<part>", "eval")


def evaluate(expr: str, scope: Dict[str, int]):
    return eval(_compiled(expr), NAMESPACE, scope)


def _assignments(form: ReferenceForm, scope: Dict[str, int], i: int = 0) -> Iterator[Dict[str, int]]:
    if i == len(form.variables):
        yield scope
        return
    name, low, high = form.variables[i]
    for value in range(evaluate(low, scope), evaluate(high, scope) + 1):
        yield from _assignments(form, {**scope, name: value}, i + 1)


def reference_amplitude(part: PartSpec, n: int, k: int, form: Optional[ReferenceForm] = None) -> int:
    """Signed count of one part at (n, k) from its reference form, or from form if given."""
    counts = walk_counts(n, k)
    if counts is None:
        return 0
    form = form or part.reference
    nl, nr = counts
    total = Fraction(0)
    for scope in _assignments(form, {"n": n, "nl": nl, "nr": nr}):
        product = 1
        for factor in form.factors:
            product *= evaluate(factor, scope)
            if not product:
                break
        if not product:
            continue
        try:
            share = Fraction(evaluate(form.rho, scope))
        except ZeroDivisionError:
            raise FormulaDefect(part.name, n, k, f"rho {form.rho} divides by zero at {scope}") from None
        sign = -1 if evaluate(form.sign, scope) % 2 else 1
        total += sign * product * share
    if total.denominator != 1:
        raise FormulaDefect(part.name, n, k, f"non-integer signed count {total}")
    return int(total)
