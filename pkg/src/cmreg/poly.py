"""Monomials (exponent tuples), the graded reverse lexicographic order, and
polynomials with exact coefficients.

A monomial is a tuple of non-negative ints, one exponent per variable.
Polynomials store terms as a dict {monomial: coefficient} with no zero
coefficients; they carry a reference to their ring for coefficient
arithmetic and printing.
"""

EXPONENT_CAP = 2**16 - 1


def mono_deg(m):
    return sum(m)


def mono_mul(a, b):
    m = tuple(x + y for x, y in zip(a, b))
    for e in m:
        if e > EXPONENT_CAP:
            raise OverflowError(f"monomial exponent exceeds {EXPONENT_CAP}")
    return m


def mono_divides(a, b):
    """True when a | b componentwise."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(b, a):
    """b / a, assuming a | b."""
    return tuple(y - x for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def grevlex_key(m):
    """Sort key: larger key = larger monomial in grevlex."""
    return (sum(m),) + tuple(-e for e in reversed(m))


def compare_monomials(a, b, order="grevlex"):
    """Return -1, 0 or 1 comparing a with b in the named order."""
    if len(a) != len(b):
        raise ValueError("monomials come from different variable counts")
    if order != "grevlex":
        raise ValueError(f"unsupported monomial order {order!r}")
    ka, kb = grevlex_key(a), grevlex_key(b)
    return (ka > kb) - (ka < kb)


class Polynomial:
    """Sparse polynomial over a graded ring's coefficient field.

    Over a quotient ring this is a representative; arithmetic does not
    normal-form-reduce, callers do that explicitly where it matters.
    """

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms  # dict mono -> nonzero coeff

    # -- basic predicates ------------------------------------------------
    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(mono_deg(m) == 0 for m in self.terms)

    def is_homogeneous(self):
        degs = {mono_deg(m) for m in self.terms}
        return len(degs) <= 1

    def degree(self):
        """Total degree, -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(mono_deg(m) for m in self.terms)

    def homogeneous_degree(self):
        if not self.terms:
            return None
        degs = {mono_deg(m) for m in self.terms}
        if len(degs) != 1:
            raise ValueError(f"polynomial {self} is not homogeneous")
        return degs.pop()

    def lead_monomial(self):
        if not self.terms:
            raise ValueError("zero polynomial has no lead monomial")
        return max(self.terms, key=grevlex_key)

    def lead_coefficient(self):
        return self.terms[self.lead_monomial()]

    # -- arithmetic ------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.ring is not self.ring and other.ring != self.ring:
                raise ValueError("polynomials from different rings")
            return other
        if isinstance(other, int):
            return self.ring.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        K = self.ring.field
        terms = dict(self.terms)
        for m, c in other.terms.items():
            s = K.add(terms.get(m, K.zero), c)
            if K.is_zero(s):
                terms.pop(m, None)
            else:
                terms[m] = s
        return Polynomial(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        K = self.ring.field
        return Polynomial(self.ring, {m: K.neg(c) for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            K = self.ring.field
            c = K.from_int(other)
            if K.is_zero(c):
                return Polynomial(self.ring, {})
            return Polynomial(self.ring, {m: K.mul(cc, c) for m, cc in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        K = self.ring.field
        terms = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                s = K.add(terms.get(m, K.zero), K.mul(c1, c2))
                if K.is_zero(s):
                    terms.pop(m, None)
                else:
                    terms[m] = s
        return Polynomial(self.ring, terms)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial powers must be non-negative ints")
        result = self.ring.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- printing --------------------------------------------------------
    def __str__(self):
        if not self.terms:
            return "0"
        names = self.ring.names
        parts = []
        for m in sorted(self.terms, key=grevlex_key, reverse=True):
            c = self.terms[m]
            factors = []
            for name, e in zip(names, m):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            body = "*".join(factors)
            if not body:
                parts.append(str(c))
            elif c == self.ring.field.one:
                parts.append(body)
            else:
                parts.append(f"{c}*{body}")
        return " + ".join(parts)

    def __repr__(self):
        return f"<poly {self}>"
