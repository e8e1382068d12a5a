"""Exact Gaussian-rational arithmetic and dense exact linear algebra.

Everything downstream computes over Q(i): ranks, kernels and spans must be
exact, so there is no floating point anywhere in this package.  Rationals are
arbitrary precision (gmpy2.mpq when available, fractions.Fraction otherwise).

Values are immutable after construction; all functions here are pure.
"""

import math

try:
    from gmpy2 import mpq as _Q
except ImportError:  # pragma: no cover - gmpy2 is an optional speedup
    from fractions import Fraction as _Q

_Q0 = _Q(0)
_Q1 = _Q(1)


class InputError(ValueError):
    """Raised when an operation receives structurally invalid input."""


def _rat_sqrt(q):
    """Exact square root of a nonnegative rational, or None."""
    if q < 0:
        return None
    num, den = q.numerator, q.denominator
    rn = math.isqrt(num)
    rd = math.isqrt(den)
    if rn * rn != num or rd * rd != den:
        return None
    return _Q(rn, rd)


def _rat_str(q):
    if q.denominator == 1:
        return str(q.numerator)
    return "%d/%d" % (q.numerator, q.denominator)


class GaussRational:
    """An element a + b*i of Q(i), with a, b exact rationals in lowest terms."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        if isinstance(re, GaussRational):
            if im:
                raise InputError("cannot combine a GaussRational re with nonzero im")
            self.re = re.re
            self.im = re.im
            return
        self.re = _Q(re)
        self.im = _Q(im)

    # -- construction helpers -------------------------------------------------

    @classmethod
    def _raw(cls, re, im):
        g = cls.__new__(cls)
        g.re = re
        g.im = im
        return g

    @classmethod
    def parse(cls, s):
        """Inverse of str(): accepts "a/b", "a/b+c/d*i", "c/d*i" and "-..." forms."""
        text = s.strip().replace(" ", "")
        if not text:
            raise InputError("empty field-element string")
        # split into real / imaginary chunks at a sign that is not the leading one
        if text.endswith("*i") or text.endswith("i"):
            body = text[: -2] if text.endswith("*i") else text[:-1]
            if body.endswith("*"):
                body = body[:-1]
            cut = None
            for k in range(len(body) - 1, 0, -1):
                if body[k] in "+-" and body[k - 1] not in "+-/*":
                    cut = k
                    break
            if cut is None:
                re_part, im_part = "0", body or "1"
            else:
                re_part, im_part = body[:cut], body[cut:]
            if im_part in ("", "+"):
                im_part = "1"
            elif im_part == "-":
                im_part = "-1"
        else:
            re_part, im_part = text, "0"
        try:
            return cls._raw(_Q(re_part.lstrip("+")), _Q(im_part.lstrip("+")))
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError("bad field-element string %r" % s) from exc

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other):
        o = other if isinstance(other, GaussRational) else GaussRational(other)
        return GaussRational._raw(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = other if isinstance(other, GaussRational) else GaussRational(other)
        return GaussRational._raw(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return GaussRational(other) - self

    def __mul__(self, other):
        o = other if isinstance(other, GaussRational) else GaussRational(other)
        a, b, c, d = self.re, self.im, o.re, o.im
        if not b and not d:
            return GaussRational._raw(a * c, _Q0)
        return GaussRational._raw(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = other if isinstance(other, GaussRational) else GaussRational(other)
        return self * o.inverse()

    def __rtruediv__(self, other):
        return GaussRational(other) * self.inverse()

    def __neg__(self):
        return GaussRational._raw(-self.re, -self.im)

    def __pos__(self):
        return self

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if isinstance(other, GaussRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int,)) or type(other) is type(_Q0):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.im))

    def conjugate(self):
        return GaussRational._raw(self.re, -self.im)

    def norm2(self):
        """The rational norm a^2 + b^2 (zero only for the zero element)."""
        return self.re * self.re + self.im * self.im

    def inverse(self):
        n = self.norm2()
        if not n:
            raise ZeroDivisionError("inverse of zero in Q(i)")
        return GaussRational._raw(self.re / n, -self.im / n)

    @property
    def is_real(self):
        return not self.im

    def sqrt(self):
        """A square root in Q(i) if one exists, else None.

        Solves (x + y*i)^2 = a + b*i exactly; requires a^2 + b^2 to be a
        rational square and the two derived halves to be squares as well.
        """
        a, b = self.re, self.im
        if not a and not b:
            return GaussRational._raw(_Q0, _Q0)
        r = _rat_sqrt(a * a + b * b)
        if r is None:
            return None
        x = _rat_sqrt((a + r) / 2)
        if x is None:
            return None
        if not b:
            if x is not None and x * x == a:
                return GaussRational._raw(x, _Q0)
            y = _rat_sqrt((r - a) / 2)
            if y is None:
                return None
            return GaussRational._raw(_Q0, y)
        y = b / (2 * x)
        cand = GaussRational._raw(x, y)
        return cand if cand * cand == self else None

    def __str__(self):
        if not self.im:
            return _rat_str(self.re)
        im_txt = _rat_str(self.im) + "*i"
        if not self.re:
            return im_txt
        sign = "+" if self.im > 0 else ""
        return _rat_str(self.re) + sign + im_txt

    def __repr__(self):
        return "GaussRational(%r)" % str(self)


ZERO = GaussRational(0)
ONE = GaussRational(1)
I = GaussRational(0, 1)


def gr(re, im=0):
    """Shorthand constructor, accepting ints, rationals or "a/b" strings."""
    return GaussRational(re, im)


class ExactMatrix:
    """Dense matrix over Q(i), row-major, immutable by convention."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows, cols, entries):
        if len(entries) != rows * cols:
            raise InputError("entry count %d != %d x %d" % (len(entries), rows, cols))
        self.rows = rows
        self.cols = cols
        self.entries = tuple(
            e if isinstance(e, GaussRational) else GaussRational(e) for e in entries
        )

    @classmethod
    def from_rows(cls, row_lists):
        rows = len(row_lists)
        cols = len(row_lists[0]) if rows else 0
        flat = []
        for r in row_lists:
            if len(r) != cols:
                raise InputError("ragged rows")
            flat.extend(r)
        return cls(rows, cols, flat)

    @classmethod
    def identity(cls, n):
        return cls(n, n, [ONE if i == j else ZERO for i in range(n) for j in range(n)])

    def at(self, i, j):
        return self.entries[i * self.cols + j]

    def row(self, i):
        return list(self.entries[i * self.cols : (i + 1) * self.cols])

    def to_rows(self):
        return [self.row(i) for i in range(self.rows)]

    def transpose(self):
        return ExactMatrix(
            self.cols,
            self.rows,
            [self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)],
        )

    def matmul(self, other):
        if self.cols != other.rows:
            raise InputError("shape mismatch in matmul")
        out = []
        orows = other.to_rows()
        for i in range(self.rows):
            acc = [ZERO] * other.cols
            base = i * self.cols
            for k in range(self.cols):
                x = self.entries[base + k]
                if x:
                    orow = orows[k]
                    acc = [a + x * b for a, b in zip(acc, orow)]
            out.extend(acc)
        return ExactMatrix(self.rows, other.cols, out)

    def apply(self, vector):
        if len(vector) != self.cols:
            raise InputError("vector length mismatch")
        vec = [v if isinstance(v, GaussRational) else GaussRational(v) for v in vector]
        out = []
        for i in range(self.rows):
            base = i * self.cols
            s = ZERO
            for k, v in enumerate(vec):
                if v:
                    e = self.entries[base + k]
                    if e:
                        s = s + e * v
            out.append(s)
        return out

    def __eq__(self, other):
        return (
            isinstance(other, ExactMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        return "ExactMatrix(%d x %d)" % (self.rows, self.cols)


# -- elimination cores ---------------------------------------------------------
#
# Pivot choice is always the first nonzero entry in column order and inserted
# rows are scaled monic at their pivot, so echelon output is deterministic.
# Real-only matrices take a raw-rational path; the generic path works over Q(i).


def _echelon_real(rows):
    """Echelon dict {pivot_col: monic row} from raw rational rows."""
    piv = {}
    for row in rows:
        row = list(row)
        n = len(row)
        c = 0
        while c < n:
            x = row[c]
            if x:
                p = piv.get(c)
                if p is None:
                    inv = 1 / x
                    piv[c] = [e * inv for e in row]
                    break
                row = [a - x * b for a, b in zip(row, p)]
            c += 1
    return piv


def _echelon_gauss(rows):
    """Echelon dict from rows of GaussRational."""
    piv = {}
    for row in rows:
        row = list(row)
        n = len(row)
        c = 0
        while c < n:
            x = row[c]
            if x:
                p = piv.get(c)
                if p is None:
                    inv = x.inverse()
                    piv[c] = [e * inv for e in row]
                    break
                row = [a - x * b for a, b in zip(row, p)]
            c += 1
    return piv


def _is_real_rows(rows):
    return all(not e.im for row in rows for e in row)


def _strip_re(rows):
    return [[e.re for e in row] for row in rows]


def _wrap_re(row):
    return [GaussRational._raw(_Q(v), _Q0) for v in row]


def rank_of_rows(rows):
    """Exact rank of a list of equal-length GaussRational rows."""
    if not rows:
        return 0
    if _is_real_rows(rows):
        return len(_echelon_real(_strip_re(rows)))
    return len(_echelon_gauss(rows))


def kernel_of_rows(rows, ncols):
    """Basis of the right null space of the matrix with the given rows.

    Returns a list of GaussRational vectors v with (row . v) = 0 for every row;
    the basis is the deterministic reduced-echelon one (free columns in order,
    each with a 1 in its own slot).
    """
    real = _is_real_rows(rows)
    if real:
        piv = _echelon_real(_strip_re(rows))
    else:
        piv = _echelon_gauss(rows)
    # back-eliminate to reduced form
    cols_sorted = sorted(piv)
    for idx in range(len(cols_sorted) - 1, -1, -1):
        c = cols_sorted[idx]
        row = piv[c]
        for c2 in cols_sorted[:idx]:
            upper = piv[c2]
            x = upper[c]
            if x:
                piv[c2] = [a - x * b for a, b in zip(upper, row)]
    pivot_cols = set(piv)
    basis = []
    zero = _Q0 if real else ZERO
    one = _Q1 if real else ONE
    for f in range(ncols):
        if f in pivot_cols:
            continue
        v = [zero] * ncols
        v[f] = one
        for c in cols_sorted:
            v[c] = -piv[c][f]
        basis.append(_wrap_re(v) if real else v)
    return basis


def mat_rank(m):
    """Rank over Q(i), computed exactly."""
    return rank_of_rows(m.to_rows())


def mat_kernel(m):
    """Basis of the right null space of m; count = cols - rank."""
    return kernel_of_rows(m.to_rows(), m.cols)


def span_dim(vectors):
    """Dimension of the linear span of the given equal-length vectors."""
    vecs = list(vectors)
    if not vecs:
        return 0
    n = len(vecs[0])
    rows = []
    for v in vecs:
        if len(v) != n:
            raise InputError("span_dim: vectors of unequal length")
        rows.append([e if isinstance(e, GaussRational) else GaussRational(e) for e in v])
    return rank_of_rows(rows)


def mat_det(m):
    """Determinant over Q(i) by fraction-normalized elimination."""
    if m.rows != m.cols:
        raise InputError("determinant of a non-square matrix")
    n = m.rows
    if n == 0:
        return ONE
    rows = m.to_rows()
    det = ONE
    for c in range(n):
        pr = None
        for r in range(c, n):
            if rows[r][c]:
                pr = r
                break
        if pr is None:
            return ZERO
        if pr != c:
            rows[c], rows[pr] = rows[pr], rows[c]
            det = -det
        pivot = rows[c][c]
        det = det * pivot
        inv = pivot.inverse()
        prow = [e * inv for e in rows[c]]
        rows[c] = prow
        for r in range(c + 1, n):
            x = rows[r][c]
            if x:
                rows[r] = [a - x * b for a, b in zip(rows[r], prow)]
    return det
