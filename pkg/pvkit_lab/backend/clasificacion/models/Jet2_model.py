from fractions import Fraction
from typing import Union

Number = Union[int, Fraction]


class Jet2:
    """
    Jet de orden 2 a lo largo de una dirección: (valor, derivada primera, derivada segunda).

    El producto sigue la regla de Leibniz truncada:
    (a, a', a'')·(b, b', b'') = (ab, a'b + ab', a''b + 2a'b' + ab'').
    """

    __slots__ = ("value", "d1", "d2")

    def __init__(self, value: Number, d1: Number = 0, d2: Number = 0):
        self.value = Fraction(value)
        self.d1 = Fraction(d1)
        self.d2 = Fraction(d2)

    @classmethod
    def variable(cls, value: Number, direction: Number) -> "Jet2":
        """Coordenada x_i + t·u_i."""
        return cls(value, direction, 0)

    @staticmethod
    def _coerce(other):
        if isinstance(other, Jet2):
            return other
        if isinstance(other, (int, Fraction)):
            return Jet2(other)
        return None

    def __add__(self, other):
        o = Jet2._coerce(other)
        if o is None:
            return NotImplemented
        return Jet2(self.value + o.value, self.d1 + o.d1, self.d2 + o.d2)

    __radd__ = __add__

    def __sub__(self, other):
        o = Jet2._coerce(other)
        if o is None:
            return NotImplemented
        return Jet2(self.value - o.value, self.d1 - o.d1, self.d2 - o.d2)

    def __rsub__(self, other):
        o = Jet2._coerce(other)
        if o is None:
            return NotImplemented
        return o.__sub__(self)

    def __mul__(self, other):
        o = Jet2._coerce(other)
        if o is None:
            return NotImplemented
        return Jet2(
            self.value * o.value,
            self.d1 * o.value + self.value * o.d1,
            self.d2 * o.value + 2 * self.d1 * o.d1 + self.value * o.d2,
        )

    __rmul__ = __mul__

    def __neg__(self):
        return Jet2(-self.value, -self.d1, -self.d2)

    def __pos__(self):
        return self

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise TypeError("solo potencias enteras no negativas")
        result = Jet2(1)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other):
        o = Jet2._coerce(other)
        if o is None:
            return NotImplemented
        return (self.value, self.d1, self.d2) == (o.value, o.d1, o.d2)

    def __hash__(self):
        return hash((self.value, self.d1, self.d2))

    def __bool__(self):
        return bool(self.value or self.d1 or self.d2)

    def as_tuple(self):
        return self.value, self.d1, self.d2

    def __repr__(self):
        return f"Jet2({self.value}, {self.d1}, {self.d2})"
