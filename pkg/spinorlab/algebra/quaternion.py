# algebra/quaternion.py
"""Hamilton quaternions, embedded in the even subalgebra as i = e23, j = e31, k = e12."""
from dataclasses import dataclass
import numpy as np

from .clifford import Multivector, INDEX_OF_NAME


@dataclass(frozen=True)
class Quaternion:
    w: float = 0.0
    x: float = 0.0
    y: float = 0.0
    z: float = 0.0

    @classmethod
    def from_array(cls, values):
        w, x, y, z = (float(v) for v in values)
        return cls(w, x, y, z)

    @classmethod
    def random_unit(cls, rng):
        values = rng.normal(size=4)
        return cls.from_array(values / np.linalg.norm(values))

    def __iter__(self):
        yield from (self.w, self.x, self.y, self.z)

    def as_array(self):
        return np.array([self.w, self.x, self.y, self.z])

    def norm2(self):
        return self.w ** 2 + self.x ** 2 + self.y ** 2 + self.z ** 2

    def dot(self, other):
        """Euclidean inner product, equal to Re(conj(self) * other)."""
        return float(np.dot(self.as_array(), other.as_array()))

    def conjugate(self):
        return Quaternion(self.w, -self.x, -self.y, -self.z)

    def __add__(self, other):
        return Quaternion.from_array(self.as_array() + other.as_array())

    def __sub__(self, other):
        return Quaternion.from_array(self.as_array() - other.as_array())

    def __mul__(self, other):
        if np.isscalar(other):
            return Quaternion.from_array(other * self.as_array())
        return quaternion_product(self, other)

    def __rmul__(self, other):
        return Quaternion.from_array(other * self.as_array())

    def embed(self):
        coefficients = np.zeros(16)
        coefficients[0] = self.w
        coefficients[INDEX_OF_NAME['e23']] = self.x
        # e31 = -e13
        coefficients[INDEX_OF_NAME['e13']] = -self.y
        coefficients[INDEX_OF_NAME['e12']] = self.z
        return Multivector(coefficients)

    @classmethod
    def from_multivector(cls, a, tol=1e-12):
        c = np.real(a.coefficients)
        support = [0, INDEX_OF_NAME['e23'], INDEX_OF_NAME['e13'], INDEX_OF_NAME['e12']]
        rest = np.delete(c, support)
        if np.any(np.abs(rest) > tol) or np.any(np.abs(np.imag(a.coefficients)) > tol):
            raise ValueError("multivector does not lie in the quaternion subalgebra")
        return cls(c[0], c[INDEX_OF_NAME['e23']], -c[INDEX_OF_NAME['e13']], c[INDEX_OF_NAME['e12']])


def quaternion_product(p, q):
    return Quaternion(
        p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
        p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
        p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
        p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w,
    )


def quaternion_conjugate(q):
    return q.conjugate()


ONE = Quaternion(1.0, 0.0, 0.0, 0.0)
I = Quaternion(0.0, 1.0, 0.0, 0.0)
J = Quaternion(0.0, 0.0, 1.0, 0.0)
K = Quaternion(0.0, 0.0, 0.0, 1.0)
