from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class SpaceForm:
    """
    A model space of dimension n with constant sectional curvature C
    (hyperbolic for C < 0, flat for C = 0, spherical for C > 0).
    """
    n: int
    C: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, 'C', Fraction(self.C))
        if int(self.n) != self.n or self.n < 2:
            raise ValueError(f"A space form needs dimension n >= 2, got {self.n}")

    @property
    def scalar_curvature(self) -> Fraction:
        """n(n-1)C, the scalar curvature of the base."""
        return self.n * (self.n - 1) * self.C

    def __str__(self) -> str:
        return f"M^{self.n}_{self.C}"


HYPERBOLIC_PLANE = SpaceForm(2, Fraction(-1))
ROUND_SPHERE = SpaceForm(2, Fraction(1))
