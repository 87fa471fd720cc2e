"""Hilbert series as Laurent numerator over (1-t)^n.

The numerator of a graded module comes from the lead-term module of its
relation basis: per free position, a monomial ideal whose quotient's
numerator is computed by the colon/sum pivot recursion
N(J) = N(J + (x)) + t * N(J : x), memoized globally.
"""

from math import comb, inf

from .poly import mono_deg, mono_divides


def _minimalize(gens):
    gens = sorted(set(gens), key=lambda m: (mono_deg(m), m))
    out = []
    for m in gens:
        if not any(mono_divides(g, m) for g in out):
            out.append(m)
    return tuple(out)


_NUMERATOR_CACHE = {}


def monomial_ideal_numerator(gens, nvars):
    """Numerator dict {degree: coeff} of S/J for the monomial ideal J."""
    gens = _minimalize(gens)
    key = gens
    hit = _NUMERATOR_CACHE.get(key)
    if hit is not None:
        return dict(hit)
    if not gens:
        out = {0: 1}
    elif any(mono_deg(m) == 0 for m in gens):
        out = {}
    else:
        support = [sum(1 for m in gens if m[v]) for v in range(nvars)]
        if max(support) == 1:
            # pairwise coprime generators: product of (1 - t^deg)
            out = {0: 1}
            for m in gens:
                d = mono_deg(m)
                nxt = dict(out)
                for e, c in out.items():
                    nxt[e + d] = nxt.get(e + d, 0) - c
                    if nxt[e + d] == 0:
                        del nxt[e + d]
                out = nxt
        else:
            v = max(range(nvars), key=lambda i: support[i])
            xv = tuple(1 if i == v else 0 for i in range(nvars))
            plus = monomial_ideal_numerator(gens + (xv,), nvars)
            colon = monomial_ideal_numerator(
                tuple(tuple(e - 1 if i == v and e else e for i, e in enumerate(m))
                      for m in gens), nvars)
            out = dict(plus)
            for e, c in colon.items():
                out[e + 1] = out.get(e + 1, 0) + c
                if out[e + 1] == 0:
                    del out[e + 1]
    _NUMERATOR_CACHE[key] = dict(out)
    return out


class HilbertSeries:
    """numerator / (1 - t)^nvars with a Laurent polynomial numerator."""

    __slots__ = ("numerator", "nvars")

    def __init__(self, numerator, nvars):
        self.numerator = {d: c for d, c in numerator.items() if c}
        self.nvars = nvars

    def is_zero(self):
        return not self.numerator

    def _reduced(self):
        """(numerator with all (1-t) factors cancelled, remaining pole order)."""
        num = dict(self.numerator)
        pole = self.nvars
        while num and sum(num.values()) == 0:
            # divide by (1 - t): cumulative sums from the bottom
            lo, hi = min(num), max(num)
            run = 0
            quo = {}
            for d in range(lo, hi + 1):
                run += num.get(d, 0)
                if run:
                    quo[d] = run
            num = quo
            pole -= 1
        return num, pole

    def dimension(self):
        """Krull dimension: pole order at t = 1; -inf for the zero module."""
        if not self.numerator:
            return -inf
        _, pole = self._reduced()
        return pole

    def indeg(self):
        """Lowest degree with a nonzero piece; +inf for the zero module."""
        if not self.numerator:
            return inf
        return min(self.numerator)

    def coefficient(self, j):
        """dim of the degree-j piece."""
        n = self.nvars
        total = 0
        for d, c in self.numerator.items():
            k = j - d
            if k >= 0:
                total += c * comb(n - 1 + k, k) if n > 0 else (c if k == 0 else 0)
        return total

    def coefficients(self, lo, hi):
        return {j: self.coefficient(j) for j in range(lo, hi + 1)}

    def top_degree(self):
        """Largest degree with a nonzero piece; requires dimension <= 0."""
        if not self.numerator:
            return -inf
        num, pole = self._reduced()
        if pole > 0:
            return inf
        return max(num)

    def twist(self, d):
        """Series of M(d): pieces shift, coefficient(j) of M(d) = old (d + j)."""
        return HilbertSeries({e - d: c for e, c in self.numerator.items()}, self.nvars)

    def add(self, other):
        if self.nvars != other.nvars:
            raise ValueError("series over different covers")
        num = dict(self.numerator)
        for d, c in other.numerator.items():
            num[d] = num.get(d, 0) + c
        return HilbertSeries(num, self.nvars)

    def __eq__(self, other):
        if not isinstance(other, HilbertSeries):
            return NotImplemented
        return self.nvars == other.nvars and self.numerator == other.numerator

    def __repr__(self):
        if not self.numerator:
            return "<series 0>"
        body = " + ".join(f"{c}*t^{d}" for d, c in sorted(self.numerator.items()))
        return f"<series ({body}) / (1-t)^{self.nvars}>"
