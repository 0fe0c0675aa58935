"""Lightweight operation counter used by the scaling benchmarks.

Counts multiply-accumulate terms, so counts are deterministic functions of
the input sizes and comparable across evaluation strategies.
"""


class OpCounter:
    __slots__ = ("ops",)

    def __init__(self) -> None:
        self.ops = 0

    def add(self, n: int) -> None:
        self.ops += n

    def __repr__(self) -> str:
        return f"OpCounter(ops={self.ops})"
