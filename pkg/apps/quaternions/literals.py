"""
Quaternion literals and the plain-text matrix format.

Literal grammar: `a + b*i + c*j + d*k` where each coefficient is an integer
or a `p/q` fraction; omitted terms are zero, a bare unit means coefficient 1
and the `*` may be left out (`-2+3*j`, `6i-k`, `1/2*k`, `0`).

Matrix text: first line `m n`, then m lines of n literals separated by `;`.
Lines starting with `#` and blank lines are ignored.
"""

import re
from fractions import Fraction

from .exceptions import LiteralError

_TERM = re.compile(r'([+-])?(\d+(?:/\d+)?)?(?:\*?([ijk]))?')
_UNITS = {None: 0, 'i': 1, 'j': 2, 'k': 3}
_NAMES = ('', 'i', 'j', 'k')


def parse_quaternion(text):
    """Parse a literal such as `-2+3*j` into a Quaternion."""
    from .scalars import Quaternion

    source = re.sub(r'\s+', '', str(text))
    if not source:
        raise LiteralError("empty quaternion literal")

    coefficients = [Fraction(0)] * 4
    pos = 0
    while pos < len(source):
        match = _TERM.match(source, pos)
        sign, number, unit = match.groups()
        if match.end() == pos or (number is None and unit is None):
            raise LiteralError(f"cannot parse quaternion literal {text!r} at offset {pos}")
        if pos > 0 and sign is None:
            raise LiteralError(f"missing sign between terms in {text!r}")
        try:
            value = Fraction(number) if number is not None else Fraction(1)
        except ZeroDivisionError as exc:
            raise LiteralError(f"zero denominator in {text!r}") from exc
        if sign == '-':
            value = -value
        coefficients[_UNITS[unit]] += value
        pos = match.end()
    return Quaternion(*coefficients)


def _format_coefficient(value, unit):
    magnitude = abs(value)
    if unit and magnitude == 1:
        return unit
    text = str(magnitude)
    return f"{text}*{unit}" if unit else text


def format_quaternion(q):
    """Canonical literal: zero terms dropped, unit coefficients elided."""
    parts = []
    for value, unit in zip(q.components, _NAMES):
        if not value:
            continue
        body = _format_coefficient(value, unit)
        if value < 0:
            parts.append(f"-{body}")
        else:
            parts.append(f"+{body}" if parts else body)
    return ''.join(parts) or '0'


def parse_matrix_text(text):
    """Read the `m n` + rows format into a QMatrix."""
    from .matrices import QMatrix

    lines = [
        line.strip() for line in text.splitlines()
        if line.strip() and not line.lstrip().startswith('#')
    ]
    if not lines:
        raise LiteralError("matrix text is empty")

    header = lines[0].split()
    if len(header) != 2 or not all(part.isdigit() for part in header):
        raise LiteralError(f"expected 'm n' header, got {lines[0]!r}")
    m, n = int(header[0]), int(header[1])

    body = lines[1:]
    if len(body) != m:
        raise LiteralError(f"header announces {m} rows, found {len(body)}")

    rows = []
    for number, line in enumerate(body, start=1):
        cells = [cell.strip() for cell in line.split(';')]
        # A trailing separator is tolerated.
        if cells and cells[-1] == '' and len(cells) == n + 1:
            cells.pop()
        if len(cells) != n:
            raise LiteralError(f"row {number} has {len(cells)} entries, expected {n}")
        rows.append([parse_quaternion(cell) for cell in cells])
    return QMatrix(rows, shape=(m, n))


def format_matrix_text(matrix):
    """Write a QMatrix in the `m n` + rows format (round-trips exactly)."""
    lines = [f"{matrix.rows} {matrix.cols}"]
    for row in matrix.data:
        lines.append('; '.join(format_quaternion(q) for q in row))
    return '\n'.join(lines) + '\n'
