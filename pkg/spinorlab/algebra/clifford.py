# algebra/clifford.py
"""
Real Clifford algebra Cl(1,3) and its complexification.

Blades are stored as bitmasks (bit i set means e_i is a factor) and
ordered by grade, then lexicographically:

    1, e0, e1, e2, e3, e01, e02, e03, e12, e13, e23, e012, e013, e023, e123, e0123

Every product in the package goes through the sign tensors built once
below from that bitmask bookkeeping.
"""
import itertools
import numpy as np

METRIC = np.array([1.0, -1.0, -1.0, -1.0])
DIMENSION = 16


def _blade_masks():
    masks = []
    for grade in range(5):
        for combo in itertools.combinations(range(4), grade):
            masks.append(sum(1 << i for i in combo))
    return tuple(masks)


BLADE_MASKS = _blade_masks()
INDEX_OF_MASK = {mask: index for index, mask in enumerate(BLADE_MASKS)}
GRADES = np.array([bin(mask).count('1') for mask in BLADE_MASKS])
BLADE_NAMES = tuple(
    '1' if mask == 0 else 'e' + ''.join(str(i) for i in range(4) if mask & (1 << i))
    for mask in BLADE_MASKS
)
INDEX_OF_NAME = {name: index for index, name in enumerate(BLADE_NAMES)}

VECTOR_SLICE = slice(1, 5)
BIVECTOR_SLICE = slice(5, 11)
TRIVECTOR_SLICE = slice(11, 15)
PSEUDOSCALAR_INDEX = 15
BIVECTOR_PAIRS = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))


def _reorder_sign(a, b):
    """Sign picked up by sorting the factors of blade a followed by blade b."""
    a >>= 1
    swaps = 0
    while a:
        swaps += bin(a & b).count('1')
        a >>= 1
    return -1.0 if swaps & 1 else 1.0


def _metric_sign(a, b):
    sign = 1.0
    common = a & b
    for i in range(4):
        if common & (1 << i):
            sign *= METRIC[i]
    return sign


def _build_tables():
    product = np.zeros((DIMENSION, DIMENSION, DIMENSION))
    wedge = np.zeros_like(product)
    contraction = np.zeros_like(product)
    for i, a in enumerate(BLADE_MASKS):
        for j, b in enumerate(BLADE_MASKS):
            k = INDEX_OF_MASK[a ^ b]
            sign = _reorder_sign(a, b) * _metric_sign(a, b)
            product[i, j, k] = sign
            if a & b == 0:
                wedge[i, j, k] = sign
            if a & b == a:
                contraction[i, j, k] = sign
    for table in (product, wedge, contraction):
        table.flags.writeable = False
    return product, wedge, contraction


PRODUCT_TABLE, WEDGE_TABLE, CONTRACTION_TABLE = _build_tables()
REVERSION_SIGNS = np.array([(-1.0) ** (g * (g - 1) // 2) for g in GRADES])
INVOLUTION_SIGNS = np.array([(-1.0) ** g for g in GRADES])


class Multivector:
    """Element of Cl(1,3) with 16 real coefficients on the canonical blades."""

    __slots__ = ('coefficients',)
    dtype = float
    # numpy scalars defer to the reflected operators below
    __array_ufunc__ = None

    def __init__(self, coefficients=None):
        if coefficients is None:
            coefficients = np.zeros(DIMENSION, dtype=self.dtype)
        coefficients = np.array(coefficients, dtype=self.dtype)
        if coefficients.shape != (DIMENSION,):
            raise ValueError(f"expected {DIMENSION} coefficients, got shape {coefficients.shape}")
        coefficients.flags.writeable = False
        self.coefficients = coefficients

    #
    # constructors
    #

    @classmethod
    def blade(cls, name, value=1.0):
        index = INDEX_OF_NAME[name] if isinstance(name, str) else int(name)
        coefficients = np.zeros(DIMENSION, dtype=complex)
        coefficients[index] = value
        return from_coefficients(coefficients) if cls is Multivector else cls(coefficients)

    @classmethod
    def scalar(cls, value):
        return cls.blade(0, value)

    @classmethod
    def vector(cls, components):
        coefficients = np.zeros(DIMENSION, dtype=complex)
        coefficients[VECTOR_SLICE] = components
        return from_coefficients(coefficients) if cls is Multivector else cls(coefficients)

    @classmethod
    def bivector(cls, components):
        coefficients = np.zeros(DIMENSION, dtype=complex)
        coefficients[BIVECTOR_SLICE] = components
        return from_coefficients(coefficients) if cls is Multivector else cls(coefficients)

    #
    # views
    #

    def grade(self, k):
        return grade_project(self, k)

    @property
    def scalar_part(self):
        return self.coefficients[0]

    @property
    def vector_part(self):
        return self.coefficients[VECTOR_SLICE].copy()

    @property
    def bivector_part(self):
        return self.coefficients[BIVECTOR_SLICE].copy()

    @property
    def trivector_part(self):
        return self.coefficients[TRIVECTOR_SLICE].copy()

    @property
    def pseudoscalar_part(self):
        return self.coefficients[PSEUDOSCALAR_INDEX]

    @property
    def real(self):
        return Multivector(np.real(self.coefficients))

    @property
    def imag(self):
        return Multivector(np.imag(self.coefficients))

    def norm(self):
        """Euclidean norm of the coefficient array."""
        return float(np.linalg.norm(self.coefficients))

    def is_even(self, tol=1e-12):
        return bool(np.all(np.abs(self.coefficients[GRADES % 2 == 1]) <= tol))

    def isclose(self, other, tol=1e-12):
        other = _coerce(other)
        return bool(np.linalg.norm(self.coefficients - other.coefficients) <= tol)

    #
    # arithmetic
    #

    def __add__(self, other):
        other = _coerce(other)
        return from_coefficients(self.coefficients + other.coefficients)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        return from_coefficients(self.coefficients - other.coefficients)

    def __rsub__(self, other):
        return _coerce(other) - self

    def __neg__(self):
        return from_coefficients(-self.coefficients)

    def __mul__(self, other):
        if np.isscalar(other):
            return from_coefficients(self.coefficients * other)
        return geometric_product(self, other)

    def __rmul__(self, other):
        if np.isscalar(other):
            return from_coefficients(other * self.coefficients)
        return geometric_product(_coerce(other), self)

    def __truediv__(self, other):
        if not np.isscalar(other):
            raise TypeError("multivectors can only be divided by scalars")
        return from_coefficients(self.coefficients / other)

    def __xor__(self, other):
        return wedge(self, other)

    def __lshift__(self, other):
        return left_contraction(self, other)

    def __invert__(self):
        return reversion(self)

    def __repr__(self):
        terms = [
            f"{value:.6g}*{name}" for value, name in zip(self.coefficients, BLADE_NAMES)
            if value != 0
        ]
        return f"{type(self).__name__}({' + '.join(terms) or '0'})"


class ComplexMultivector(Multivector):
    """Element of the complexified algebra; real and imaginary parts are Multivectors."""

    __slots__ = ()
    dtype = complex

    @classmethod
    def from_parts(cls, real, imag=None):
        coefficients = np.asarray(real.coefficients, dtype=complex)
        if imag is not None:
            coefficients = coefficients + 1j * imag.coefficients
        return cls(coefficients)


def from_coefficients(coefficients):
    if np.iscomplexobj(coefficients) and np.any(np.imag(coefficients) != 0):
        return ComplexMultivector(coefficients)
    return Multivector(np.real(coefficients))


def _coerce(value):
    if isinstance(value, Multivector):
        return value
    if np.isscalar(value):
        return Multivector.scalar(value)
    raise TypeError(f"cannot interpret {type(value).__name__} as a multivector")


def _bilinear(table, a, b):
    a, b = _coerce(a), _coerce(b)
    return from_coefficients(np.einsum('i,j,ijk->k', a.coefficients, b.coefficients, table))


def geometric_product(a, b):
    return _bilinear(PRODUCT_TABLE, a, b)


def wedge(a, b):
    return _bilinear(WEDGE_TABLE, a, b)


def left_contraction(a, b):
    return _bilinear(CONTRACTION_TABLE, a, b)


def grade_project(a, k):
    if k not in range(5):
        raise ValueError(f"grade must be between 0 and 4, got {k}")
    a = _coerce(a)
    return from_coefficients(np.where(GRADES == k, a.coefficients, 0))


def reversion(a):
    a = _coerce(a)
    return from_coefficients(REVERSION_SIGNS * a.coefficients)


def grade_involution(a):
    a = _coerce(a)
    return from_coefficients(INVOLUTION_SIGNS * a.coefficients)


def scalar_product(a, b):
    """Metric extended to the whole algebra, g(a, b) = <reversion(a) b>_0."""
    return geometric_product(reversion(a), b).scalar_part


def minkowski_dot(u, v):
    return np.sum(METRIC * np.asarray(u) * np.asarray(v))


def minkowski_square(u):
    return minkowski_dot(u, u)


PSEUDOSCALAR = Multivector.blade('e0123')
ONE = Multivector.scalar(1.0)
