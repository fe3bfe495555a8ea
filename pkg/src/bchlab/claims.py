"""Parameter claims [n, k, d] with their source result."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class ParamClaim:
    n: int
    k: int
    d_lower: int
    d_upper: int
    source: str
    weights: dict[int, int] | None = field(default=None, compare=False)

    def __post_init__(self):
        if not (1 <= self.d_lower <= self.d_upper <= self.n and 0 <= self.k <= self.n):
            raise ValueError(f"inconsistent claim {self}")

    def contains(self, d: int) -> bool:
        return self.d_lower <= d <= self.d_upper

    def as_dict(self):
        out = {"n": self.n, "k": self.k, "dLower": self.d_lower, "dUpper": self.d_upper, "source": self.source}
        if self.weights is not None:
            out["weights"] = {str(w): c for w, c in sorted(self.weights.items())}
        return out
