"""Exact dense linear algebra over the rationals.

No floating point anywhere: entries are fractions.Fraction (always lowest
terms, exact big-integer arithmetic), ranks come from fraction-free
Bareiss elimination on denominator-cleared rows, and characteristic
polynomials from the Faddeev-LeVerrier recurrence.
"""

import math
from fractions import Fraction
from collections.abc import Iterable, Sequence

Rational = Fraction


def _as_fraction(value) -> Fraction:
    if isinstance(value, float):
        raise TypeError(f"float entries are not exact, got {value!r}")
    if isinstance(value, bool):
        raise TypeError(f"entries must be numbers, got {value!r}")
    return Fraction(value)


class ExactMatrix:
    """Immutable dense matrix with Fraction entries.

    Accepts ints, Fractions, and "p/q" strings as entries; floats are
    rejected to keep every computation exact.
    """

    __slots__ = ("_rows", "_cols", "_entries")

    def __init__(self, rows: int, cols: int, entries: Iterable):
        if not isinstance(rows, int) or isinstance(rows, bool) or rows < 1:
            raise ValueError(f"rows must be a positive integer, got {rows!r}")
        if not isinstance(cols, int) or isinstance(cols, bool) or cols < 1:
            raise ValueError(f"cols must be a positive integer, got {cols!r}")
        es = tuple(_as_fraction(e) for e in entries)
        if len(es) != rows * cols:
            raise ValueError(
                f"expected {rows * cols} entries for {rows}x{cols}, got {len(es)}")
        self._rows = rows
        self._cols = cols
        self._entries = es

    @classmethod
    def from_rows(cls, rows_data: Sequence[Sequence]) -> "ExactMatrix":
        rows_data = [list(r) for r in rows_data]
        if not rows_data:
            raise ValueError("at least one row required")
        width = len(rows_data[0])
        for r in rows_data:
            if len(r) != width:
                raise ValueError("ragged rows: all rows must have equal length")
        return cls(len(rows_data), width,
                   (e for row in rows_data for e in row))

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls(n, n, (1 if i == j else 0
                          for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "ExactMatrix":
        return cls(rows, cols, (0,) * (rows * cols))

    @property
    def rows(self) -> int:
        return self._rows

    @property
    def cols(self) -> int:
        return self._cols

    @property
    def is_square(self) -> bool:
        return self._rows == self._cols

    def entry(self, i: int, j: int) -> Fraction:
        """0-based access."""
        if not (0 <= i < self._rows and 0 <= j < self._cols):
            raise IndexError(f"({i}, {j}) outside {self._rows}x{self._cols}")
        return self._entries[i * self._cols + j]

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        return self.entry(*ij)

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self._entries[i * self._cols:(i + 1) * self._cols]

    def to_rows(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self._rows)]

    def trace(self) -> Fraction:
        if not self.is_square:
            raise ValueError("trace requires a square matrix")
        return sum(self._entries[i * self._cols + i] for i in range(self._rows))

    def __add__(self, other) -> "ExactMatrix":
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if (self._rows, self._cols) != (other._rows, other._cols):
            raise ValueError("shape mismatch in addition")
        return ExactMatrix(self._rows, self._cols,
                           (a + b for a, b in zip(self._entries, other._entries)))

    def __sub__(self, other) -> "ExactMatrix":
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if (self._rows, self._cols) != (other._rows, other._cols):
            raise ValueError("shape mismatch in subtraction")
        return ExactMatrix(self._rows, self._cols,
                           (a - b for a, b in zip(self._entries, other._entries)))

    def __mul__(self, other):
        if isinstance(other, ExactMatrix):
            return mat_mul(self, other)
        if isinstance(other, (int, Fraction)):
            return ExactMatrix(self._rows, self._cols,
                               (e * other for e in self._entries))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return (self._rows == other._rows and self._cols == other._cols
                and self._entries == other._entries)

    def __hash__(self) -> int:
        return hash((self._rows, self._cols, self._entries))

    def __repr__(self) -> str:
        body = "; ".join(
            " ".join(str(e) for e in self.row(i)) for i in range(self._rows))
        return f"ExactMatrix({self._rows}x{self._cols}: {body})"


def mat_mul(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    """Exact matrix product."""
    if a.cols != b.rows:
        raise ValueError(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    n, k, m = a.rows, a.cols, b.cols
    arows = [a.row(i) for i in range(n)]
    bcols = [[b.entry(t, j) for t in range(k)] for j in range(m)]
    out = []
    for i in range(n):
        ar = arows[i]
        for j in range(m):
            bc = bcols[j]
            out.append(sum(ar[t] * bc[t] for t in range(k)))
    return ExactMatrix(n, m, out)


def mat_pow(a: ExactMatrix, k: int) -> ExactMatrix:
    """a**k by repeated squaring; a**0 is the identity."""
    if not a.is_square:
        raise ValueError("powers require a square matrix")
    if not isinstance(k, int) or isinstance(k, bool) or k < 0:
        raise ValueError(f"exponent must be a non-negative integer, got {k!r}")
    result = ExactMatrix.identity(a.rows)
    base = a
    while k:
        if k & 1:
            result = mat_mul(result, base)
        base = mat_mul(base, base) if k > 1 else base
        k >>= 1
    return result


def shift(a: ExactMatrix, lam) -> ExactMatrix:
    """a - lam*I."""
    if not a.is_square:
        raise ValueError("shift requires a square matrix")
    lam = _as_fraction(lam)
    n = a.rows
    return ExactMatrix(n, n, (a.entry(i, j) - lam if i == j else a.entry(i, j)
                              for i in range(n) for j in range(n)))


def clear_denominators(a: ExactMatrix) -> tuple[ExactMatrix, int]:
    """Smallest positive d with d*a integral, and the scaled matrix.

    Returns (d*a, d); d is the lcm of all entry denominators (1 for an
    integer matrix).
    """
    d = 1
    for e in a._entries:
        d = d * e.denominator // math.gcd(d, e.denominator)
    if d == 1:
        return a, 1
    return a * d, d


def _integer_rows(a: ExactMatrix) -> list[list[int]]:
    # scale each row independently; row scaling never changes the rank
    out = []
    for i in range(a.rows):
        row = a.row(i)
        d = 1
        for e in row:
            d = d * e.denominator // math.gcd(d, e.denominator)
        out.append([int(e * d) for e in row])
    return out


def rank(a: ExactMatrix) -> int:
    """Exact rank via fraction-free (Bareiss) Gaussian elimination.

    Rows are cleared to integers first; each elimination step divides by
    the previous pivot, which Sylvester's determinant identity guarantees
    to be exact, so intermediate values stay integers of modest size.
    Pivoting is deterministic: first row with a nonzero entry in the
    current column.
    """
    m = _integer_rows(a)
    nrows, ncols = a.rows, a.cols
    r = 0
    prev = 1
    for col in range(ncols):
        pivot_row = next((i for i in range(r, nrows) if m[i][col]), None)
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        piv = m[r][col]
        for i in range(r + 1, nrows):
            head = m[i][col]
            mi, mr = m[i], m[r]
            for j in range(col + 1, ncols):
                q, rem = divmod(mi[j] * piv - head * mr[j], prev)
                assert rem == 0, "Bareiss division must be exact"
                mi[j] = q
            mi[col] = 0
        prev = piv
        r += 1
        if r == nrows:
            break
    return r


class PolynomialZ:
    """Polynomial with integer coefficients, stored lowest-degree first.

    Trailing zero coefficients are trimmed; the zero polynomial has an
    empty coefficient tuple and degree -1.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coefficients: Iterable[int] = ()):
        cs = list(coefficients)
        for c in cs:
            if not isinstance(c, int) or isinstance(c, bool):
                raise ValueError(f"coefficients must be integers, got {c!r}")
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs = tuple(cs)

    @property
    def coefficients(self) -> tuple[int, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    def __call__(self, x):
        """Exact Horner evaluation; x may be an int or Fraction."""
        acc = Fraction(0) if isinstance(x, Fraction) else 0
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolynomialZ):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        terms = []
        for e in range(self.degree, -1, -1):
            c = self._coeffs[e]
            if not c:
                continue
            if e == 0:
                body = str(abs(c))
            else:
                mag = "" if abs(c) == 1 else str(abs(c))
                body = f"{mag}x" if e == 1 else f"{mag}x^{e}"
            terms.append(("-" if c < 0 else "+", body))
        sign, first = terms[0]
        text = ("-" if sign == "-" else "") + first
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"PolynomialZ({list(self._coeffs)!r})"


def char_poly(a: ExactMatrix) -> PolynomialZ:
    """Characteristic polynomial det(xI - B) of B = d*a, the input with
    denominators cleared (d = 1 for integer matrices, so then it is the
    characteristic polynomial of a itself).

    Uses the Faddeev-LeVerrier recurrence: M_1 = B, c_{n-1} = -tr(M_1),
    M_k = B(M_{k-1} + c_{n-k+1} I), c_{n-k} = -tr(M_k)/k.  Every division
    is exact and the result is monic with integer coefficients.  Roots of
    the result are d times the eigenvalues of a; rational_eigenvalues
    performs the unscaling.
    """
    if not a.is_square:
        raise ValueError("characteristic polynomial requires a square matrix")
    b, _ = clear_denominators(a)
    n = b.rows
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    ident = ExactMatrix.identity(n)
    mk = b
    coeffs[n - 1] = -mk.trace()
    for k in range(2, n + 1):
        mk = mat_mul(b, mk + coeffs[n - k + 1] * ident)
        coeffs[n - k] = Fraction(-mk.trace(), k)
    assert all(c.denominator == 1 for c in coeffs), \
        "Faddeev-LeVerrier on an integer matrix must give integers"
    return PolynomialZ(int(c) for c in coeffs)


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i != n // i:
                large.append(n // i)
        i += 1
    return small + large[::-1]


def _deflate(coeffs: list[int], p: int, q: int) -> list[int]:
    # divide by (q*x - p) with p/q in lowest terms; exact over the integers
    # whenever p/q is a root (Gauss's lemma)
    n = len(coeffs) - 1
    out = [0] * n
    acc, rem = divmod(coeffs[n], q)
    assert rem == 0
    out[n - 1] = acc
    for k in range(n - 1, 0, -1):
        acc, rem = divmod(coeffs[k] + p * out[k], q)
        assert rem == 0
        out[k - 1] = acc
    assert coeffs[0] + p * out[0] == 0, "claimed root must divide exactly"
    return out


def rational_roots(poly: PolynomialZ) -> tuple[list[tuple[Fraction, int]], int]:
    """All rational roots with multiplicities, plus the leftover degree.

    Candidates come from the rational root theorem (numerator divides the
    trailing nonzero coefficient, denominator divides the leading one) and
    are divided out by exact synthetic division until none remain.  The
    second value is the degree of the remaining factor, which has no
    rational roots (0 when the polynomial splits over Q).
    """
    if poly.is_zero:
        raise ValueError("the zero polynomial has no meaningful root set")
    coeffs = list(poly.coefficients)
    roots: dict[Fraction, int] = {}
    k0 = 0
    while coeffs[k0] == 0:
        k0 += 1
    if k0:
        roots[Fraction(0)] = k0
        coeffs = coeffs[k0:]
    if len(coeffs) > 1:
        nums = _divisors(coeffs[0])
        dens = _divisors(coeffs[-1])
        candidates = sorted({Fraction(s * p, q)
                             for p in nums for q in dens for s in (1, -1)})
        for cand in candidates:
            if len(coeffs) == 1:
                break
            while len(coeffs) > 1 and _eval_int(coeffs, cand) == 0:
                coeffs = _deflate(coeffs, cand.numerator, cand.denominator)
                roots[cand] = roots.get(cand, 0) + 1
    return sorted(roots.items()), len(coeffs) - 1


def _eval_int(coeffs: list[int], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def rational_eigenvalues(a: ExactMatrix) -> tuple[list[tuple[Fraction, int]], int]:
    """Eigenvalues of a lying in Q, with algebraic multiplicities, ascending.

    The second value is the degree of the characteristic polynomial factor
    whose roots are irrational or complex (0 when all eigenvalues are
    rational).  Denominator scaling is handled here: roots of char_poly(a)
    are divided by the clearing factor d.
    """
    _, d = clear_denominators(a)
    roots, remainder = rational_roots(char_poly(a))
    return [(r / d, mult) for r, mult in roots], remainder


def matrix_to_json_dict(a: ExactMatrix) -> dict:
    """{"rows": n, "cols": m, "entries": [[...], ...]} with integer entries
    as JSON numbers and non-integers as "p/q" strings."""
    def encode(e: Fraction):
        return int(e) if e.denominator == 1 else f"{e.numerator}/{e.denominator}"
    return {
        "rows": a.rows,
        "cols": a.cols,
        "entries": [[encode(e) for e in a.row(i)] for i in range(a.rows)],
    }


def matrix_from_json_dict(data) -> ExactMatrix:
    """Inverse of matrix_to_json_dict, with full validation.

    Entries must be JSON integers or "p/q" strings; floats are rejected
    because they cannot round-trip exactly.
    """
    if not isinstance(data, dict):
        raise ValueError("matrix JSON must be an object")
    missing = {"rows", "cols", "entries"} - data.keys()
    if missing:
        raise ValueError(f"matrix JSON missing keys: {sorted(missing)}")
    rows, cols, entries = data["rows"], data["cols"], data["entries"]
    if not isinstance(rows, int) or isinstance(rows, bool) or rows < 1:
        raise ValueError(f'"rows" must be a positive integer, got {rows!r}')
    if not isinstance(cols, int) or isinstance(cols, bool) or cols < 1:
        raise ValueError(f'"cols" must be a positive integer, got {cols!r}')
    if not isinstance(entries, list) or len(entries) != rows:
        raise ValueError(f'"entries" must be a list of {rows} rows')
    flat = []
    for i, row in enumerate(entries):
        if not isinstance(row, list) or len(row) != cols:
            raise ValueError(f"row {i} must be a list of {cols} entries")
        for j, e in enumerate(row):
            if isinstance(e, bool) or isinstance(e, float):
                raise ValueError(
                    f"entry ({i}, {j}) must be an integer or 'p/q' string, got {e!r}")
            if isinstance(e, str):
                try:
                    flat.append(Fraction(e))
                except (ValueError, ZeroDivisionError) as exc:
                    raise ValueError(f"entry ({i}, {j}) is not a valid fraction: {e!r}") from exc
            elif isinstance(e, int):
                flat.append(Fraction(e))
            else:
                raise ValueError(
                    f"entry ({i}, {j}) must be an integer or 'p/q' string, got {e!r}")
    return ExactMatrix(rows, cols, flat)
