from dataclasses import dataclass, field
from typing import Tuple

from liecx.errors import InvalidInputError
from liecx.validators.input_validator import require_prime


@dataclass(frozen=True)
class DimSeries:
    """Dimensions of a graded vector space, dims[m] in homological degree m"""
    p: int
    label: str
    dims: Tuple[int, ...] = field(default=())

    def __post_init__(self):
        require_prime(self.p)
        dims = tuple(int(d) for d in self.dims)
        if any(d < 0 for d in dims):
            raise InvalidInputError(f"dimensions must be nonnegative, got {dims}")
        object.__setattr__(self, 'dims', dims)

    @property
    def m_max(self) -> int:
        """Highest degree held"""
        return len(self.dims) - 1

    def __len__(self) -> int:
        return len(self.dims)

    def __getitem__(self, m: int) -> int:
        return self.dims[m]

    def to_dict(self) -> dict:
        """JSON-ready form"""
        return {
            "p": self.p,
            "label": self.label,
            "m_max": self.m_max,
            "dims": list(self.dims),
        }

    @classmethod
    def from_dict(cls, data: dict) -> 'DimSeries':
        """Inverse of to_dict, checking m_max against the dims"""
        dims = data.get("dims")
        if not isinstance(dims, list):
            raise InvalidInputError("series payload has no 'dims' list")
        series = cls(p=data["p"], label=str(data.get("label", "")), dims=tuple(dims))
        if "m_max" in data and data["m_max"] != series.m_max:
            raise InvalidInputError(
                f"m_max {data['m_max']} does not match {len(dims)} dimensions"
            )
        return series

