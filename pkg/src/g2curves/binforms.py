"""Homogeneous binary forms over Q(i).

A form of degree d in (u, v) is a coefficient vector c of length d+1 where
c[k] multiplies u^(d-k) v^k.  The zero form keeps an explicit degree tag so
graded maps between twisted sums stay well-typed; adding forms of different
tagged degrees is an error, not a promotion.
"""

from .exactnum import GaussRational, InputError, ONE, ZERO, gr


class BinForm:
    __slots__ = ("degree", "coeffs")

    def __init__(self, degree, coeffs):
        coeffs = tuple(c if isinstance(c, GaussRational) else GaussRational(c) for c in coeffs)
        if degree < 0:
            raise InputError("negative degree")
        if len(coeffs) != degree + 1:
            raise InputError("degree %d needs %d coefficients, got %d" % (degree, degree + 1, len(coeffs)))
        self.degree = degree
        self.coeffs = coeffs

    @classmethod
    def of(cls, *coeffs):
        return cls(len(coeffs) - 1, coeffs)

    @classmethod
    def zero(cls, degree):
        return cls(degree, (ZERO,) * (degree + 1))

    @classmethod
    def monomial(cls, degree, v_power, coeff=1):
        """coeff * u^(degree - v_power) * v^(v_power)."""
        if not 0 <= v_power <= degree:
            raise InputError("monomial exponent out of range")
        c = [ZERO] * (degree + 1)
        c[v_power] = GaussRational(coeff)
        return cls(degree, c)

    @property
    def is_zero(self):
        return not any(self.coeffs)

    def __bool__(self):
        return not self.is_zero

    def __eq__(self, other):
        return (
            isinstance(other, BinForm)
            and self.degree == other.degree
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.degree, self.coeffs))

    def __add__(self, other):
        if self.degree != other.degree:
            raise InputError("degree mismatch %d vs %d" % (self.degree, other.degree))
        return BinForm(self.degree, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        if self.degree != other.degree:
            raise InputError("degree mismatch %d vs %d" % (self.degree, other.degree))
        return BinForm(self.degree, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return BinForm(self.degree, [-a for a in self.coeffs])

    def scale(self, s):
        s = s if isinstance(s, GaussRational) else GaussRational(s)
        return BinForm(self.degree, [s * a for a in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, GaussRational):
            return self.scale(other)
        out = [ZERO] * (self.degree + other.degree + 1)
        for k, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[k + j] = out[k + j] + a * b
        return BinForm(self.degree + other.degree, out)

    def eval(self, u0, v0):
        u0 = u0 if isinstance(u0, GaussRational) else GaussRational(u0)
        v0 = v0 if isinstance(v0, GaussRational) else GaussRational(v0)
        d = self.degree
        upow = [ONE]
        vpow = [ONE]
        for _ in range(d):
            upow.append(upow[-1] * u0)
            vpow.append(vpow[-1] * v0)
        s = ZERO
        for k, c in enumerate(self.coeffs):
            if c:
                s = s + c * upow[d - k] * vpow[k]
        return s

    def deriv_u(self):
        if self.degree == 0:
            raise InputError("derivative of a degree-0 form")
        d = self.degree
        return BinForm(d - 1, [self.coeffs[k] * gr(d - k) for k in range(d)])

    def deriv_v(self):
        if self.degree == 0:
            raise InputError("derivative of a degree-0 form")
        d = self.degree
        return BinForm(d - 1, [self.coeffs[k] * gr(k) for k in range(1, d + 1)])

    def v_order(self):
        """Vanishing order at (1:0), i.e. the power of v dividing the form."""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        raise InputError("order of the zero form")

    def u_order(self):
        """Vanishing order at (0:1), i.e. the power of u dividing the form."""
        for k in range(self.degree, -1, -1):
            if self.coeffs[k]:
                return self.degree - k
        raise InputError("order of the zero form")

    def monic(self):
        """Scale so the first nonzero coefficient (highest u-power) is 1."""
        for c in self.coeffs:
            if c:
                return self.scale(c.inverse())
        raise InputError("monic of the zero form")

    def to_strings(self):
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_strings(cls, degree, strings):
        return cls(degree, [GaussRational.parse(s) for s in strings])

    def __repr__(self):
        terms = []
        d = self.degree
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "u^%d" % (d - k) if d - k else ""
            if k:
                mono += ("*" if mono else "") + "v^%d" % k
            txt = str(c)
            terms.append(("(%s)" % txt if ("+" in txt[1:] or "-" in txt[1:] or "i" in txt) else txt) + ("*" + mono if mono else ""))
        return "BinForm<%d>(%s)" % (d, " + ".join(terms) if terms else "0")


# -- dehomogenized polynomial helpers -------------------------------------------
#
# Internal polys are dense coefficient lists in x = v/u, low degree first, with
# the convention form = u^d * P(v/u) after u/v content has been stripped.


def _poly_trim(p):
    while p and not p[-1]:
        p.pop()
    return p


def _poly_divmod(a, b):
    a = list(a)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    inv = b[-1].inverse()
    q = [ZERO] * max(0, len(a) - len(b) + 1)
    for k in range(len(a) - len(b), -1, -1):
        f = a[k + len(b) - 1] * inv
        if f:
            q[k] = f
            for j, bj in enumerate(b):
                a[k + j] = a[k + j] - f * bj
    return q, _poly_trim(a)

def _poly_gcd(a, b):
    a = _poly_trim(list(a))
    b = _poly_trim(list(b))
    while b:
        _, r = _poly_divmod(a, b)
        if r:
            inv = r[-1].inverse()
            r = [c * inv for c in r]
        a, b = b, r
    return a


def _strip(form):
    """(u_order, v_order, poly) with poly the dehomogenized stripped form."""
    uo = form.u_order()
    vo = form.v_order()
    poly = [form.coeffs[k] for k in range(vo, form.degree - uo + 1)]
    return uo, vo, poly


def _assemble(u_pow, v_pow, poly):
    degree = u_pow + v_pow + len(poly) - 1
    coeffs = [ZERO] * (degree + 1)
    for k, c in enumerate(poly):
        coeffs[v_pow + k] = c
    return BinForm(degree, coeffs)


def bf_gcd(f, g):
    """Monic greatest common divisor of two binary forms over Q(i)."""
    if f.is_zero and g.is_zero:
        raise InputError("gcd of two zero forms")
    if f.is_zero:
        return g.monic()
    if g.is_zero:
        return f.monic()
    fu, fv, fp = _strip(f)
    gu, gv, gp = _strip(g)
    core = _poly_gcd(fp, gp)
    return _assemble(min(fu, gu), min(fv, gv), core).monic()


def bf_divexact(f, g):
    """Exact quotient f/g; raises if g does not divide f."""
    if g.is_zero:
        raise ZeroDivisionError("division by the zero form")
    if f.is_zero:
        if f.degree < g.degree:
            raise InputError("zero form of degree < divisor degree")
        return BinForm.zero(f.degree - g.degree)
    fu, fv, fp = _strip(f)
    gu, gv, gp = _strip(g)
    if gu > fu or gv > fv:
        raise InputError("non-exact division of binary forms")
    q, r = _poly_divmod(fp, gp)
    if r:
        raise InputError("non-exact division of binary forms")
    return _assemble(fu - gu, fv - gv, q)


def bf_resultant(f, g):
    """Sylvester resultant of two binary forms; zero iff they share a root."""
    from .exactnum import ExactMatrix, mat_det

    m, n = f.degree, g.degree
    if m < 1 or n < 1:
        raise InputError("resultant needs degrees >= 1")
    size = m + n
    rows = []
    for shift in range(n):
        row = [ZERO] * size
        for k, c in enumerate(f.coeffs):
            row[shift + k] = c
        rows.append(row)
    for shift in range(m):
        row = [ZERO] * size
        for k, c in enumerate(g.coeffs):
            row[shift + k] = c
        rows.append(row)
    return mat_det(ExactMatrix.from_rows(rows))


def bf_derivatives(f):
    """(df/du, df/dv); Euler identity u*f_u + v*f_v = d*f holds exactly."""
    return f.deriv_u(), f.deriv_v()


def bf_order_at(f, point):
    """Vanishing order of a nonzero form at the parameter point (u0:v0)."""
    if f.is_zero:
        raise InputError("order of the zero form")
    u0, v0 = (x if isinstance(x, GaussRational) else GaussRational(x) for x in point)
    if not u0 and not v0:
        raise InputError("(0,0) is not a point of P^1")
    if not v0:
        return f.v_order()
    if not u0:
        return f.u_order()
    # general point: order = multiplicity of x0 = v0/u0 as a root of P(x)
    _, _, poly = _strip(f)
    x0 = v0 / u0
    order = 0
    while True:
        val = ZERO
        for c in reversed(poly):
            val = val * x0 + c
        if val:
            return order
        poly, _ = _poly_divmod(poly, [-x0, ONE])
        order += 1
