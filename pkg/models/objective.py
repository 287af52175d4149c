from enum import Enum


class Objective(Enum):
    """Which vertex-induced edge weight is being maximized"""
    SUM = "sum"
    PRODUCT = "product"

    @classmethod
    def parse(cls, value: str) -> "Objective":
        return cls(value.strip().lower())
