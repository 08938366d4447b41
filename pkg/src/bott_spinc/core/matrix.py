"""
Bott Matrix Model

Strictly upper triangular n x n matrices over F2 stored as row bit masks.
Indices in the public API are 1-based like a_ij; inside a mask, entry a_ij
sits at bit j - 1 of row i.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .errors import MatrixIndexError, ShapeError, TokenError, TriangularityError

MIN_DIMENSION = 2
MAX_DIMENSION = 64


@dataclass(frozen=True, slots=True)
class BottMatrix:
    """Strictly upper triangular matrix A = [a_ij] over F2"""

    n: int
    rows: tuple[int, ...]
    columns: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if not MIN_DIMENSION <= self.n <= MAX_DIMENSION:
            raise ShapeError(
                f"Dimension must be between {MIN_DIMENSION} and {MAX_DIMENSION}, got {self.n}"
            )
        if len(self.rows) != self.n:
            raise ShapeError(f"Expected {self.n} rows, got {len(self.rows)}")

        full = (1 << self.n) - 1
        for i, mask in enumerate(self.rows):
            if mask < 0 or mask & ~full:
                raise ShapeError(f"Row {i + 1} has entries outside columns 1..{self.n}")
            below = mask & ((1 << (i + 1)) - 1)
            if below:
                column = (below & -below).bit_length()
                raise TriangularityError(
                    f"a_{i + 1},{column} = 1 is on or below the diagonal",
                    line=i + 1,
                    column=column,
                )

        columns = [0] * self.n
        for i, mask in enumerate(self.rows):
            bits = mask
            while bits:
                low = bits & -bits
                columns[low.bit_length() - 1] |= 1 << i
                bits ^= low
        object.__setattr__(self, "columns", tuple(columns))

    @classmethod
    def zero(cls, n: int) -> BottMatrix:
        return cls(n, (0,) * n)

    @classmethod
    def from_rows(cls, n: int, rows: Iterable[int]) -> BottMatrix:
        return cls(n, tuple(rows))

    @classmethod
    def from_entries(cls, n: int, entries: Iterable[tuple[int, int]]) -> BottMatrix:
        """Build a matrix from the 1-based positions (i, j) of its ones"""
        rows = [0] * n
        for i, j in entries:
            if not (1 <= i <= n and 1 <= j <= n):
                raise MatrixIndexError(f"Entry ({i}, {j}) outside 1..{n}")
            if i >= j:
                raise TriangularityError(
                    f"a_{i},{j} = 1 is on or below the diagonal", line=i, column=j
                )
            rows[i - 1] |= 1 << (j - 1)
        return cls(n, tuple(rows))

    def _check_index(self, index: int) -> None:
        if not 1 <= index <= self.n:
            raise MatrixIndexError(f"Index {index} outside 1..{self.n}")

    def entry(self, i: int, j: int) -> int:
        self._check_index(i)
        self._check_index(j)
        return (self.rows[i - 1] >> (j - 1)) & 1

    def row(self, i: int) -> int:
        """Mask of A_(i); bit j - 1 holds a_ij"""
        self._check_index(i)
        return self.rows[i - 1]

    def column(self, j: int) -> int:
        """Mask of A^(j); bit i - 1 holds a_ij"""
        self._check_index(j)
        return self.columns[j - 1]

    def row_weight(self, i: int) -> int:
        return self.row(i).bit_count()

    def to_lists(self) -> list[list[int]]:
        return [[(mask >> j) & 1 for j in range(self.n)] for mask in self.rows]

    def to_text(self) -> str:
        """Canonical text form: n lines of n single-space separated bits"""
        return "".join(" ".join(str(bit) for bit in row) + "\n" for row in self.to_lists())

    def __str__(self) -> str:
        return self.to_text().rstrip("\n")


def parse(text: str) -> BottMatrix:
    """
    Parse the matrix text format.

    Blank lines and lines starting with '#' are ignored. Every other line is
    one row of whitespace-separated symbols from {0, 1}.

    Raises:
        TokenError: If a symbol is not 0 or 1
        ShapeError: If the rows do not form a square matrix
        TriangularityError: If an entry on or below the diagonal is 1
    """
    parsed: list[tuple[int, list[int]]] = []
    for line_number, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        values = []
        for column, token in enumerate(stripped.split(), start=1):
            if token not in ("0", "1"):
                raise TokenError(
                    f"Unexpected symbol {token!r}, expected 0 or 1",
                    line=line_number,
                    column=column,
                )
            values.append(int(token))
        parsed.append((line_number, values))

    n = len(parsed)
    if n < MIN_DIMENSION:
        raise ShapeError(f"Expected at least {MIN_DIMENSION} rows, got {n}")
    if n > MAX_DIMENSION:
        raise ShapeError(f"At most {MAX_DIMENSION} rows are supported, got {n}")

    rows = []
    for i, (line_number, values) in enumerate(parsed):
        if len(values) != n:
            raise ShapeError(
                f"Row {i + 1} has {len(values)} entries, expected {n}", line=line_number
            )
        mask = 0
        for j, value in enumerate(values):
            if value:
                if j <= i:
                    raise TriangularityError(
                        f"a_{i + 1},{j + 1} = 1 is on or below the diagonal",
                        line=line_number,
                        column=j + 1,
                    )
                mask |= 1 << j
        rows.append(mask)
    return BottMatrix(n, tuple(rows))


def to_text(matrix: BottMatrix) -> str:
    return matrix.to_text()
