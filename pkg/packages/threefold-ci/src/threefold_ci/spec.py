"""Complete intersections of n - 3 hypersurfaces in P^n."""

from typing import Self

from pydantic import BaseModel, ConfigDict, model_validator


class CISpec(BaseModel):
    """A smooth complete-intersection threefold: ambient P^n, hypersurface degrees d_j."""

    model_config = ConfigDict(frozen=True)

    n: int
    degrees: tuple[int, ...]

    @model_validator(mode="after")
    def _check(self) -> Self:
        if self.n < 4:
            raise ValueError(f"ambient dimension must be at least 4, got {self.n}")
        if len(self.degrees) != self.n - 3:
            raise ValueError(f"P^{self.n} needs {self.n - 3} degrees, got {len(self.degrees)}")
        if any(d < 1 for d in self.degrees):
            raise ValueError(f"degrees must be positive, got {list(self.degrees)}")
        return self

    @classmethod
    def parse(cls, n: int, degrees: str) -> Self:
        """From a comma-separated degree list such as ``"2,2"``."""
        return cls(n=n, degrees=tuple(int(d) for d in degrees.split(",") if d.strip()))

    @property
    def degree_sum(self) -> int:
        return sum(self.degrees)

    def __str__(self) -> str:
        return f"P^{self.n}, degrees ({', '.join(map(str, self.degrees))})"
