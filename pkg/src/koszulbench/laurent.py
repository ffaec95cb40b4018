"""Exact Laurent polynomials in one variable v over the integers.

Coefficients are arbitrary-precision ints keyed by integer exponents.
Zero coefficients are never stored, so structural equality of the
coefficient maps is mathematical equality. The variable q is v squared
by convention; see as_q_monomial_set and in_q.
"""

from __future__ import annotations


class LaurentPoly:
    """An integer Laurent polynomial sum_e c_e * v^e, stored sparsely."""

    __slots__ = ("_coeffs", "_hash")

    def __init__(self, coeffs=None):
        clean = {}
        if coeffs:
            for e, c in coeffs.items():
                if c:
                    clean[int(e)] = c
        self._coeffs = clean
        self._hash = None

    @staticmethod
    def zero() -> "LaurentPoly":
        return LaurentPoly()

    @staticmethod
    def one() -> "LaurentPoly":
        return LaurentPoly({0: 1})

    @staticmethod
    def monomial(exponent: int, coeff: int = 1) -> "LaurentPoly":
        """coeff * v^exponent"""
        return LaurentPoly({exponent: coeff})

    @staticmethod
    def from_pairs(pairs) -> "LaurentPoly":
        acc = {}
        for e, c in pairs:
            acc[e] = acc.get(e, 0) + c
        return LaurentPoly(acc)

    def coeff(self, exponent: int) -> int:
        return self._coeffs.get(exponent, 0)

    def support(self):
        """Sorted exponents carrying a nonzero coefficient."""
        return sorted(self._coeffs)

    def items(self):
        return self._coeffs.items()

    def is_zero(self) -> bool:
        return not self._coeffs

    def __bool__(self):
        return bool(self._coeffs)

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self._coeffs == other._coeffs
        if isinstance(other, int):
            return self._coeffs == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._coeffs.items()))
        return self._hash

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        acc = dict(self._coeffs)
        for e, c in other._coeffs.items():
            s = acc.get(e, 0) + c
            if s:
                acc[e] = s
            else:
                acc.pop(e, None)
        out = LaurentPoly.__new__(LaurentPoly)
        out._coeffs = acc
        out._hash = None
        return out

    __radd__ = __add__

    def __neg__(self):
        out = LaurentPoly.__new__(LaurentPoly)
        out._coeffs = {e: -c for e, c in self._coeffs.items()}
        out._hash = None
        return out

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        acc = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                e = e1 + e2
                s = acc.get(e, 0) + c1 * c2
                if s:
                    acc[e] = s
                else:
                    del acc[e]
        out = LaurentPoly.__new__(LaurentPoly)
        out._coeffs = acc
        out._hash = None
        return out

    __rmul__ = __mul__

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by v^k."""
        out = LaurentPoly.__new__(LaurentPoly)
        out._coeffs = {e + k: c for e, c in self._coeffs.items()}
        out._hash = None
        return out

    def inflate(self, k: int) -> "LaurentPoly":
        """Substitute v -> v^k (exponents multiply by k)."""
        out = LaurentPoly.__new__(LaurentPoly)
        out._coeffs = {e * k: c for e, c in self._coeffs.items()}
        out._hash = None
        return out

    def involute(self) -> "LaurentPoly":
        """The bar involution exchanging v and v^-1."""
        out = LaurentPoly.__new__(LaurentPoly)
        out._coeffs = {-e: c for e, c in self._coeffs.items()}
        out._hash = None
        return out

    def dominates(self, other: "LaurentPoly") -> bool:
        """Support dominance: every exponent of self also appears in other.

        This is the relation written p preceq q: p_i nonzero implies
        q_i nonzero. Reflexive and transitive, not antisymmetric.
        """
        oc = other._coeffs
        return all(e in oc for e in self._coeffs)

    def as_q_monomial_set(self):
        """Read the polynomial as a sum of distinct-exponent q-monomials.

        Requires every exponent even and every coefficient positive.
        Returns {e // 2 for e in support}. Raises ValueError naming the
        offending exponent otherwise.
        """
        out = set()
        for e, c in self._coeffs.items():
            if e % 2:
                raise ValueError(
                    "not expressible in q = v^2: odd exponent %d" % e)
            if c < 0:
                raise ValueError(
                    "not a graded dimension: negative coefficient at exponent %d" % e)
            out.add(e // 2)
        return out

    def render(self, var: str = "v") -> str:
        """Human-readable text, exponents descending, e.g. 'v^2 + 3*v^-1'."""
        if not self._coeffs:
            return "0"
        parts = []
        for e in sorted(self._coeffs, reverse=True):
            c = self._coeffs[e]
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if e == 0:
                body = str(mag)
            elif e == 1:
                body = var if mag == 1 else "%d*%s" % (mag, var)
            else:
                body = "%s^%d" % (var, e) if mag == 1 else "%d*%s^%d" % (mag, var, e)
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += " %s %s" % (sign, body)
        return text

    def to_json_dict(self):
        """JSON form: object mapping exponent strings to coefficients."""
        return {str(e): self._coeffs[e] for e in sorted(self._coeffs)}

    @staticmethod
    def from_json_dict(d) -> "LaurentPoly":
        return LaurentPoly({int(e): int(c) for e, c in d.items()})

    def __repr__(self):
        return "LaurentPoly(%s)" % self.render()


def _coerce(x):
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly({0: x})
    return None


def in_q(qpoly) -> LaurentPoly:
    """Build a LaurentPoly in v from a dict of q-exponents (q = v^2)."""
    return LaurentPoly({2 * e: c for e, c in qpoly.items()})
