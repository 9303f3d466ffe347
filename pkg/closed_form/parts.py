from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Optional, Tuple

from clusters.profile import FORMULA_ENDS


class Regime(str, Enum):
    SINGLE = "single"
    PAIRS = "pairs"
    MIXED = "mixed"


class FormulaDefect(ArithmeticError):
    def __init__(self, part: str, n: int, k: int, reason: str):
        super().__init__(f"part {part} at n={n}, k={k}: {reason}")
        self.part = part
        self.n = n
        self.k = k
        self.reason = reason


@dataclass(frozen=True, order=True)
class PartKey:
    basis: int
    end: str
    left: Regime
    right: Regime

    def __post_init__(self):
        if not 0 <= self.basis <= 7:
            raise ValueError(f"basis index must be in 0..7, got {self.basis}")
        if self.end not in FORMULA_ENDS:
            raise ValueError(f"unknown end code {self.end!r}")

    def __str__(self):
        return f"j{self.basis}/{self.end}/{self.left.value}-{self.right.value}"

    @classmethod
    def parse(cls, text: str) -> "PartKey":
        try:
            basis, end, regimes = text.split("/")
            left, right = regimes.split("-")
            return cls(int(basis.lstrip("j")), end, Regime(left), Regime(right))
        except ValueError as exc:
            raise ValueError(f"cannot parse part key {text!r}") from exc


@dataclass(frozen=True)
class Correction:
    """One expression of a part as written and as shipped."""

    written: str
    shipped: str
    reason: str = ""

    def __str__(self):
        text = f"{self.written} -> {self.shipped}"
        return f"{text} ({self.reason})" if self.reason else text


@dataclass(frozen=True)
class ReferenceForm:
    """A part's reference sum, written as integer expressions.

    variables are summed in order, each as (name, low, high) with bounds that
    may use n, nl, nr and earlier variables. The sign is the exponent of -1.
    """

    variables: Tuple[Tuple[str, str, str], ...] = ()
    sign: str = "0"
    factors: Tuple[str, ...] = ()
    rho: str = "1"
    note: str = ""

    def substitute(self, old: str, new: str) -> "ReferenceForm":
        """Copy with every expression equal to old replaced by new."""
        def swap(expr: str) -> str:
            return new if expr == old else expr

        variables = tuple((name, swap(low), swap(high)) for name, low, high in self.variables)
        out = replace(
            self,
            variables=variables,
            sign=swap(self.sign),
            factors=tuple(swap(f) for f in self.factors),
            rho=swap(self.rho),
        )
        if out == self:
            raise ValueError(f"expression {old!r} does not occur in the form")
        return out


@dataclass(frozen=True)
class PartSpec:
    key: PartKey
    tail: str
    reference: ReferenceForm = field(default_factory=ReferenceForm)
    # the form as written, kept only when corrections were applied to it
    written: Optional[ReferenceForm] = None
    corrections: Tuple[Correction, ...] = ()
    use_derived: bool = False

    @property
    def name(self) -> str:
        return str(self.key)

    @property
    def written_form(self) -> ReferenceForm:
        return self.written or self.reference

    def corrected(self, *corrections: Correction) -> "PartSpec":
        form = self.reference
        for c in corrections:
            form = form.substitute(c.written, c.shipped)
        return replace(
            self,
            reference=form,
            written=self.written_form,
            corrections=self.corrections + tuple(corrections),
        )

    def with_reference(self, reference: ReferenceForm) -> "PartSpec":
        return replace(self, reference=reference)

    def with_tail(self, tail: str) -> "PartSpec":
        return replace(self, tail=tail)

    def derived(self) -> "PartSpec":
        return replace(self, use_derived=True)
