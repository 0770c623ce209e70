"""Sparse integer Laurent polynomials in one variable (t) or two (v, z).

Zero coefficients are never stored, so equality of the term maps is ring
equality.  The canonical string forms are exact-match comparable:
``"c*t^a"`` terms sorted by exponent, and ``"c*v^a*z^b"`` terms sorted by
(a, b), joined with ``" + "`` and negative coefficients kept inline.
"""

from __future__ import annotations


class ArityError(ValueError):
    """Mixed one- and two-variable operands."""


class _LaurentBase:
    __slots__ = ("terms",)

    def __init__(self, terms=None):
        data = {}
        if terms:
            for exp, coef in (terms.items() if isinstance(terms, dict) else terms):
                if coef:
                    data[exp] = data.get(exp, 0) + coef
                    if not data[exp]:
                        del data[exp]
        self.terms = data

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            return self.terms == ({} if other == 0 else {self._zero_exp(): other})
        if type(other) is not type(self):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash((type(self).__name__, tuple(sorted(self.terms.items()))))

    def _coerce(self, other):
        if isinstance(other, int):
            return type(self)({self._zero_exp(): other})
        if type(other) is not type(self):
            raise ArityError(f"cannot mix {type(self).__name__} with {type(other).__name__}")
        return other

    def __add__(self, other):
        other = self._coerce(other)
        data = dict(self.terms)
        for exp, coef in other.terms.items():
            val = data.get(exp, 0) + coef
            if val:
                data[exp] = val
            else:
                data.pop(exp, None)
        out = type(self).__new__(type(self))
        out.terms = data
        return out

    __radd__ = __add__

    def __neg__(self):
        out = type(self).__new__(type(self))
        out.terms = {exp: -coef for exp, coef in self.terms.items()}
        return out

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            out = type(self).__new__(type(self))
            out.terms = {e: c * other for e, c in self.terms.items()} if other else {}
            return out
        other = self._coerce(other)
        data = {}
        add = self._exp_add
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = add(e1, e2)
                val = data.get(e, 0) + c1 * c2
                if val:
                    data[e] = val
                else:
                    del data[e]
        out = type(self).__new__(type(self))
        out.terms = data
        return out

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not defined on polynomials")
        result = type(self)({self._zero_exp(): 1})
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __repr__(self):
        return f"{type(self).__name__}({self})"


class LaurentPoly1(_LaurentBase):
    """Integer Laurent polynomial in t; term map exponent -> coefficient."""

    @staticmethod
    def _zero_exp():
        return 0

    @staticmethod
    def _exp_add(a, b):
        return a + b

    @staticmethod
    def t(exp: int = 1, coef: int = 1) -> "LaurentPoly1":
        return LaurentPoly1({exp: coef})

    def shift(self, k: int) -> "LaurentPoly1":
        """Multiply by t**k."""
        return LaurentPoly1({e + k: c for e, c in self.terms.items()})

    def min_exp(self) -> int:
        return min(self.terms) if self.terms else 0

    def max_exp(self) -> int:
        return max(self.terms) if self.terms else 0

    def __call__(self, t0: int) -> int:
        """Evaluate at an integer point; requires nonnegative exponents."""
        total = 0
        for e, c in self.terms.items():
            if e < 0:
                raise ValueError("evaluation requires a plain polynomial")
            total += c * t0**e
        return total

    def reciprocal(self) -> "LaurentPoly1":
        """Substitute t -> 1/t."""
        return LaurentPoly1({-e: c for e, c in self.terms.items()})

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*t^{e}" for e, c in sorted(self.terms.items()))


class LaurentPoly2(_LaurentBase):
    """Integer Laurent polynomial in v, z; term map (v-exp, z-exp) -> coefficient."""

    @staticmethod
    def _zero_exp():
        return (0, 0)

    @staticmethod
    def _exp_add(a, b):
        return (a[0] + b[0], a[1] + b[1])

    @staticmethod
    def vz(vexp: int = 0, zexp: int = 0, coef: int = 1) -> "LaurentPoly2":
        return LaurentPoly2({(vexp, zexp): coef})

    def flip_v(self) -> "LaurentPoly2":
        """Substitute v -> 1/v (the effect of mirroring on this invariant)."""
        return LaurentPoly2({(-a, b): c for (a, b), c in self.terms.items()})

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(
            f"{c}*v^{a}*z^{b}" for (a, b), c in sorted(self.terms.items())
        )


ONE1 = LaurentPoly1({0: 1})
ONE2 = LaurentPoly2({(0, 0): 1})


def poly_div_exact(num: LaurentPoly1, den: LaurentPoly1) -> LaurentPoly1:
    """Exact division in Z[t, 1/t]; raises if the division leaves a remainder."""
    if not den:
        raise ZeroDivisionError("division by zero polynomial")
    num_shift = num.shift(-num.min_exp())
    den_shift = den.shift(-den.min_exp())
    rem = dict(num_shift.terms)
    dmax = den_shift.max_exp()
    dlead = den_shift.terms[dmax]
    quot = {}
    while rem:
        rmax = max(rem)
        if rmax < dmax:
            raise ValueError("inexact polynomial division")
        lead = rem[rmax]
        if lead % dlead:
            raise ValueError("inexact polynomial division")
        q = lead // dlead
        e = rmax - dmax
        quot[e] = q
        for de, dc in den_shift.terms.items():
            k = de + e
            val = rem.get(k, 0) - q * dc
            if val:
                rem[k] = val
            else:
                rem.pop(k, None)
    out = LaurentPoly1(quot)
    return out.shift(num.min_exp() - den.min_exp())
