"""Exact arithmetic on formal power series truncated at a fixed order.

Coefficients live in the rationals (stdlib :class:`fractions.Fraction`,
unbounded integers) or, for congruence sweeps, in Z/m.  Floating point is
deliberately rejected: everything downstream asserts exact integrality and
congruence identities, which rounding would silently destroy.

Arithmetic between series of different truncation orders truncates to the
smaller order, and equality compares coefficients up to the smaller order.
"""

from __future__ import annotations

from fractions import Fraction

__all__ = ["TruncatedSeries", "ResidueSeries", "qd"]

Coefficient = int | Fraction


def _normalize(value) -> Coefficient:
    """Coerce to an exact coefficient, demoting integral fractions to int."""
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else value
    if isinstance(value, int):
        return value
    raise TypeError(f"exact coefficient required (int or Fraction), got {type(value).__name__}")


class TruncatedSeries:
    """A power series known exactly through the coefficient of q^order.

    Instances are immutable and safe to share.  Supports +, -, * (by a series
    or an exact scalar), ** with any integer exponent, exact inversion, the
    coefficient-scaling operator q*d/dq, and reduction to Z/m.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs, order: int | None = None):
        values = tuple(_normalize(c) for c in coeffs)
        if not values:
            raise ValueError("a truncated series needs at least its constant coefficient")
        if order is not None and len(values) != order + 1:
            raise ValueError(f"got {len(values)} coefficients for truncation order {order} "
                             f"(need exactly {order + 1})")
        self._coeffs = values

    @classmethod
    def zero(cls, order: int) -> TruncatedSeries:
        return cls([0] * (order + 1))

    @classmethod
    def one(cls, order: int) -> TruncatedSeries:
        return cls([1] + [0] * order)

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coefficients(self) -> tuple[Coefficient, ...]:
        return self._coeffs

    def coefficient(self, k: int) -> Coefficient:
        """The coefficient of q^k; raises IndexError beyond the truncation order."""
        if not 0 <= k <= self.order:
            raise IndexError(f"coefficient index {k} outside stored range 0..{self.order}")
        return self._coeffs[k]

    __getitem__ = coefficient

    def truncated(self, order: int) -> TruncatedSeries:
        """The same series cut down to a smaller truncation order."""
        if not 0 <= order <= self.order:
            raise ValueError(f"cannot truncate an order-{self.order} series to order {order}")
        return TruncatedSeries(self._coeffs[:order + 1])

    def with_coefficient(self, k: int, value) -> TruncatedSeries:
        """A copy with the coefficient of q^k replaced (for perturbation tests)."""
        if not 0 <= k <= self.order:
            raise IndexError(f"coefficient index {k} outside stored range 0..{self.order}")
        coeffs = list(self._coeffs)
        coeffs[k] = value
        return TruncatedSeries(coeffs)

    # -- ring operations -------------------------------------------------

    def __add__(self, other) -> TruncatedSeries:
        if isinstance(other, (int, Fraction)):
            coeffs = list(self._coeffs)
            coeffs[0] = coeffs[0] + other
            return TruncatedSeries(coeffs)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return TruncatedSeries([self._coeffs[k] + other._coeffs[k] for k in range(n + 1)])

    __radd__ = __add__

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries([-c for c in self._coeffs])

    def __sub__(self, other) -> TruncatedSeries:
        if isinstance(other, (int, Fraction, TruncatedSeries)):
            return self + (-other if isinstance(other, TruncatedSeries) else -other)
        return NotImplemented

    def __rsub__(self, other) -> TruncatedSeries:
        return (-self) + other

    def __mul__(self, other) -> TruncatedSeries:
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries([c * other for c in self._coeffs])
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = min(self.order, other.order)
        a, b = self._coeffs, other._coeffs
        out = [0] * (n + 1)
        for i in range(n + 1):
            ai = a[i]
            if ai:
                for k in range(i, n + 1):
                    out[k] += ai * b[k - i]
        return TruncatedSeries(out)

    __rmul__ = __mul__

    def inverse(self) -> TruncatedSeries:
        """Multiplicative inverse up to the truncation order.

        Standard recurrence g_0 = 1/f_0, g_k = -(1/f_0) * sum_{i=1..k} f_i g_{k-i}.
        """
        f = self._coeffs
        if f[0] == 0:
            raise ZeroDivisionError("series with zero constant term has no inverse")
        lead = _normalize(Fraction(1) / Fraction(f[0]))
        n = self.order
        out = [lead] + [0] * n
        for k in range(1, n + 1):
            acc = 0
            for i in range(1, k + 1):
                if f[i]:
                    acc += f[i] * out[k - i]
            out[k] = -lead * acc
        return TruncatedSeries(out)

    def __pow__(self, exponent: int) -> TruncatedSeries:
        if not isinstance(exponent, int):
            raise TypeError("series exponent must be an integer")
        if exponent < 0:
            return self.inverse() ** (-exponent)
        if exponent == 0:
            return TruncatedSeries.one(self.order)
        result = None
        base = self
        e = exponent
        while True:
            if e & 1:
                result = base if result is None else result * base
            e >>= 1
            if not e:
                return result
            base = base * base

    def q_derivative(self) -> TruncatedSeries:
        """Apply q*d/dq: the coefficient of q^k is scaled by k.  Same order."""
        return TruncatedSeries([k * c for k, c in enumerate(self._coeffs)])

    def reduce_mod(self, modulus: int) -> ResidueSeries:
        """Reduce each coefficient into Z/m via the modular inverse of its denominator.

        Fails if any coefficient's reduced denominator shares a factor with m.
        """
        if modulus < 2:
            raise ValueError("modulus must be at least 2")
        residues = []
        for k, c in enumerate(self._coeffs):
            if isinstance(c, Fraction):
                try:
                    inv = pow(c.denominator, -1, modulus)
                except ValueError:
                    raise ValueError(
                        f"coefficient {c} of q^{k} has denominator not invertible mod {modulus}"
                    ) from None
                residues.append(c.numerator * inv % modulus)
            else:
                residues.append(c % modulus)
        return ResidueSeries(residues, modulus)

    # -- comparison and display -------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self._coeffs[0] == other and not any(self._coeffs[1:])
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return self._coeffs[:n + 1] == other._coeffs[:n + 1]

    __hash__ = None

    def __repr__(self):
        head = ", ".join(str(c) for c in self._coeffs[:6])
        tail = ", ..." if self.order > 5 else ""
        return f"TruncatedSeries([{head}{tail}], order={self.order})"


def qd(series):
    """Operator form of q*d/dq, for either coefficient domain."""
    return series.q_derivative()


def _packed_convolution(a, b, modulus: int) -> list[int]:
    # Kronecker substitution: with each residue packed into its own fixed-width
    # slot of one big integer, a single CPython bigint multiply performs the
    # whole Cauchy product.  No slot can overflow because every convolution
    # coefficient is < (m-1)^2 * len(a).
    length = len(a)
    bound = (modulus - 1) * (modulus - 1) * length
    width = (bound.bit_length() + 7) // 8
    packed_a = int.from_bytes(b"".join(c.to_bytes(width, "little") for c in a), "little")
    packed_b = int.from_bytes(b"".join(c.to_bytes(width, "little") for c in b), "little")
    raw = (packed_a * packed_b).to_bytes(2 * length * width, "little")
    return [int.from_bytes(raw[k * width:(k + 1) * width], "little") % modulus
            for k in range(length)]


class ResidueSeries:
    """A truncated series with coefficients in Z/m, stored as integers in [0, m)."""

    __slots__ = ("_coeffs", "_modulus")

    def __init__(self, coeffs, modulus: int, order: int | None = None):
        if not isinstance(modulus, int) or modulus < 2:
            raise ValueError("modulus must be an integer >= 2")
        values = tuple(int(c) % modulus for c in coeffs)
        if not values:
            raise ValueError("a residue series needs at least its constant coefficient")
        if order is not None and len(values) != order + 1:
            raise ValueError(f"got {len(values)} coefficients for truncation order {order} "
                             f"(need exactly {order + 1})")
        self._coeffs = values
        self._modulus = modulus

    @classmethod
    def zero(cls, order: int, modulus: int) -> ResidueSeries:
        return cls([0] * (order + 1), modulus)

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    @property
    def modulus(self) -> int:
        return self._modulus

    @property
    def coefficients(self) -> tuple[int, ...]:
        return self._coeffs

    def coefficient(self, k: int) -> int:
        if not 0 <= k <= self.order:
            raise IndexError(f"coefficient index {k} outside stored range 0..{self.order}")
        return self._coeffs[k]

    __getitem__ = coefficient

    def truncated(self, order: int) -> ResidueSeries:
        if not 0 <= order <= self.order:
            raise ValueError(f"cannot truncate an order-{self.order} series to order {order}")
        return ResidueSeries(self._coeffs[:order + 1], self._modulus)

    def with_coefficient(self, k: int, value: int) -> ResidueSeries:
        if not 0 <= k <= self.order:
            raise IndexError(f"coefficient index {k} outside stored range 0..{self.order}")
        coeffs = list(self._coeffs)
        coeffs[k] = value
        return ResidueSeries(coeffs, self._modulus)

    def _check_compatible(self, other: ResidueSeries):
        if self._modulus != other._modulus:
            raise ValueError(f"modulus mismatch: {self._modulus} vs {other._modulus}")

    def __add__(self, other):
        if isinstance(other, int):
            coeffs = list(self._coeffs)
            coeffs[0] += other
            return ResidueSeries(coeffs, self._modulus)
        if not isinstance(other, ResidueSeries):
            return NotImplemented
        self._check_compatible(other)
        n = min(self.order, other.order)
        return ResidueSeries([self._coeffs[k] + other._coeffs[k] for k in range(n + 1)],
                             self._modulus)

    __radd__ = __add__

    def __neg__(self):
        return ResidueSeries([-c for c in self._coeffs], self._modulus)

    def __sub__(self, other):
        if isinstance(other, ResidueSeries):
            return self + (-other)
        if isinstance(other, int):
            return self + (-other)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, int):
            return ResidueSeries([c * other for c in self._coeffs], self._modulus)
        if not isinstance(other, ResidueSeries):
            return NotImplemented
        self._check_compatible(other)
        n = min(self.order, other.order)
        out = _packed_convolution(self._coeffs[:n + 1], other._coeffs[:n + 1], self._modulus)
        return ResidueSeries(out, self._modulus)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> ResidueSeries:
        if not isinstance(exponent, int) or exponent < 0:
            raise TypeError("residue series exponent must be a non-negative integer")
        result = ResidueSeries([1] + [0] * self.order, self._modulus)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def q_derivative(self) -> ResidueSeries:
        return ResidueSeries([k * c for k, c in enumerate(self._coeffs)], self._modulus)

    def first_nonzero(self) -> tuple[int, int] | None:
        """(index, residue) of the first nonzero coefficient, or None if zero."""
        for k, c in enumerate(self._coeffs):
            if c:
                return k, c
        return None

    @property
    def is_zero(self) -> bool:
        return self.first_nonzero() is None

    def __eq__(self, other):
        if not isinstance(other, ResidueSeries):
            return NotImplemented
        if self._modulus != other._modulus:
            return False
        n = min(self.order, other.order)
        return self._coeffs[:n + 1] == other._coeffs[:n + 1]

    __hash__ = None

    def __repr__(self):
        head = ", ".join(str(c) for c in self._coeffs[:8])
        tail = ", ..." if self.order > 7 else ""
        return f"ResidueSeries([{head}{tail}], modulus={self._modulus}, order={self.order})"
