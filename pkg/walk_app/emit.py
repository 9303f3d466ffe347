import io
import sys
from decimal import Decimal, localcontext
from fractions import Fraction
from pathlib import Path
from typing import Optional, TextIO

import pandas as pd

from walk.distribution import Distribution
from walk_app.schemas_output import DistributionOutput, Entry


def exact(p: Fraction) -> str:
    return f"{p.numerator}/{p.denominator}"


def render_decimal(p: Fraction, precision: int) -> str:
    """p rounded to `precision` significant digits."""
    with localcontext() as ctx:
        ctx.prec = precision + 5
        value = Decimal(p.numerator) / Decimal(p.denominator)
    return format(value, f".{precision}g")


def distribution_frame(dist: Distribution, precision: int) -> pd.DataFrame:
    rows = dist.rows()
    return pd.DataFrame(
        {
            "position": [k for k, _ in rows],
            "probability": [render_decimal(p, precision) for _, p in rows],
        }
    )


def distribution_output(dist: Distribution, memory: int, steps: int) -> DistributionOutput:
    return DistributionOutput(
        memory=memory,
        steps=steps,
        entries=[Entry(k=k, p=exact(p)) for k, p in dist.rows()],
    )


def parse_exact(text: str) -> Fraction:
    num, _, den = text.partition("/")
    return Fraction(int(num), int(den or 1))


def render(dist: Distribution, memory: int, steps: int, fmt: str, precision: int) -> str:
    if fmt == "json":
        return distribution_output(dist, memory, steps).model_dump_json(indent=2) + "\n"
    buf = io.StringIO()
    distribution_frame(dist, precision).to_csv(buf, index=False, lineterminator="\n")
    return buf.getvalue()


def write_text(text: str, out: Optional[str], stream: Optional[TextIO] = None) -> None:
    if out is None:
        # current sys.stdout, not the one bound at import
        (stream or sys.stdout).write(text)
        return
    path = Path(out)
    path.parent.mkdir(parents=True, exist_ok=True)
    # newline="" keeps LF endings on every platform
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)
