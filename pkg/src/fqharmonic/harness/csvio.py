"""CSV exchange format for window tables.

Format: optional context lines ``window=lo:hi`` or ``biwindow=l:i,m:n``,
then the header ``q,dim,enumeration=lex``, then one row per point with the
point index followed by the p-1 cyclotomic coefficients as ``num/den``.
The row order is the package-wide enumeration: lexicographic on coordinate
digits, least-significant position first.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional

from fqharmonic.exactnum import CycNum, DomainError
from fqharmonic.tables import Table


def render_table(
    q: int,
    table: Table,
    window: Optional[tuple[int, int]] = None,
    biwindow: Optional[tuple[int, int, int, int]] = None,
) -> str:
    dim = 0
    n = len(table)
    while q**dim < n:
        dim += 1
    if q**dim != n:
        raise DomainError("table length is not a power of q")
    lines = []
    if window is not None:
        lines.append(f"window={window[0]}:{window[1]}")
    if biwindow is not None:
        l, i, m, nn = biwindow
        lines.append(f"biwindow={l}:{i},{m}:{nn}")
    lines.append(f"{q},{dim},enumeration=lex")
    for idx, c in enumerate(table):
        coeffs = ",".join(f"{x.numerator}/{x.denominator}" for x in c.coeffs)
        lines.append(f"{idx},{coeffs}")
    return "\n".join(lines) + "\n"


def parse_table(text: str, p: int) -> tuple[int, int, Table]:
    """Returns (q, dim, table); context lines are skipped."""
    rows = [ln.strip() for ln in text.splitlines() if ln.strip()]
    rows = [ln for ln in rows if not (ln.startswith("window=") or ln.startswith("biwindow="))]
    if not rows:
        raise DomainError("empty table file")
    head = rows[0].split(",")
    if len(head) != 3 or head[2] != "enumeration=lex":
        raise DomainError(f"bad table header {rows[0]!r}")
    q, dim = int(head[0]), int(head[1])
    table = []
    for expect, ln in enumerate(rows[1:]):
        parts = ln.split(",")
        if int(parts[0]) != expect:
            raise DomainError(f"row {expect} out of order")
        coeffs = []
        for tok in parts[1:]:
            num, _, den = tok.partition("/")
            coeffs.append(Fraction(int(num), int(den or "1")))
        if len(coeffs) != p - 1:
            raise DomainError(f"row {expect} has {len(coeffs)} coefficients, wanted {p - 1}")
        table.append(CycNum(p, tuple(coeffs)))
    if len(table) != q**dim:
        raise DomainError("row count does not match the header")
    return q, dim, tuple(table)
