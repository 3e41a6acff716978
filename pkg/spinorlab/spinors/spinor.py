# spinors/spinor.py
from dataclasses import dataclass
import numpy as np

from ..algebra.gamma import CHIRAL, change_of_basis, gamma_matrices


@dataclass(frozen=True, eq=False)
class SpinorC4:
    """Four complex components tagged with the gamma representation they live in."""
    components: np.ndarray
    rep: str = CHIRAL
    label: str = None

    def __post_init__(self):
        components = np.array(self.components, dtype=complex).reshape(-1)
        if components.shape != (4,):
            raise ValueError(f"a Dirac spinor needs 4 components, got {components.shape[0]}")
        if not np.all(np.isfinite(components)):
            raise ValueError("spinor components must be finite")
        gamma_matrices(self.rep)
        components.flags.writeable = False
        object.__setattr__(self, 'components', components)

    @classmethod
    def zero(cls, rep=CHIRAL):
        return cls(np.zeros(4, dtype=complex), rep)

    @classmethod
    def random(cls, rng, rep=CHIRAL):
        return cls(rng.normal(size=4) + 1j * rng.normal(size=4), rep)

    def __iter__(self):
        return iter(self.components)

    def __getitem__(self, index):
        return self.components[index]

    def norm2(self):
        return float(np.real(np.vdot(self.components, self.components)))

    def bar(self):
        """Dirac adjoint row psi^dagger gamma_0."""
        return self.components.conj() @ gamma_matrices(self.rep).gammas[0]

    def to_rep(self, tag):
        if tag == self.rep:
            return self
        return SpinorC4(change_of_basis(self.rep, tag) @ self.components, tag, self.label)

    def scaled(self, factor):
        return SpinorC4(factor * self.components, self.rep, self.label)

    def with_components(self, components):
        return SpinorC4(components, self.rep, self.label)

    def isclose(self, other, tol=1e-10):
        other = other.to_rep(self.rep)
        return bool(np.linalg.norm(self.components - other.components) <= tol)

    def __add__(self, other):
        return self.with_components(self.components + other.to_rep(self.rep).components)

    def __sub__(self, other):
        return self.with_components(self.components - other.to_rep(self.rep).components)

    def __repr__(self):
        values = ', '.join(f"{z.real:.6g}{z.imag:+.6g}j" for z in self.components)
        return f"SpinorC4([{values}], rep={self.rep!r})"
