from typing import Dict, Mapping, Optional

import numpy as np


class Tape:
    """
    Two-sided binary tape backed by two growable int8 arrays.

    Position p >= 0 lives at right[p], position p < 0 at left[-p - 1].
    Cells outside [leftmost, rightmost] are always 0.
    """

    def __init__(
        self,
        left: Optional[np.ndarray] = None,
        right: Optional[np.ndarray] = None,
        head: int = 0,
        leftmost: int = 0,
        rightmost: int = 0,
        capacity: int = 1024,
    ):
        self.left = left if left is not None else np.zeros(capacity, dtype=np.int8)
        self.right = right if right is not None else np.zeros(capacity, dtype=np.int8)
        self.head = head
        self.leftmost = leftmost
        self.rightmost = rightmost

    @classmethod
    def from_cells(cls, cells: Mapping[int, int], head: int = 0) -> "Tape":
        tape = cls(capacity=16)
        tape.head = head
        tape._touch(head)
        for position, symbol in cells.items():
            tape.write(position, symbol)
        return tape

    def _touch(self, position: int):
        if position >= 0:
            if position >= self.right.shape[0]:
                self.right = _grow(self.right, position)
            self.rightmost = max(self.rightmost, position)
        else:
            if -position - 1 >= self.left.shape[0]:
                self.left = _grow(self.left, -position - 1)
            self.leftmost = min(self.leftmost, position)

    def read(self, position: int) -> int:
        if position >= 0:
            return int(self.right[position]) if position < self.right.shape[0] else 0
        index = -position - 1
        return int(self.left[index]) if index < self.left.shape[0] else 0

    def write(self, position: int, symbol: int):
        if symbol not in (0, 1):
            raise ValueError(f"tape symbols are 0 or 1, got {symbol}")
        self._touch(position)
        if position >= 0:
            self.right[position] = symbol
        else:
            self.left[-position - 1] = symbol

    def cells(self) -> Dict[int, int]:
        """Every visited cell, leftmost to rightmost."""
        return {p: self.read(p) for p in range(self.leftmost, self.rightmost + 1)}

    @property
    def extent(self) -> int:
        return self.rightmost - self.leftmost + 1

    def render(self, window: int = 40) -> str:
        low = max(self.leftmost, self.head - window)
        high = min(self.rightmost, self.head + window)
        return "".join(
            f"[{self.read(p)}]" if p == self.head else str(self.read(p)) for p in range(low, high + 1)
        )


def _grow(cells: np.ndarray, index: int) -> np.ndarray:
    size = max(cells.shape[0], 1)
    while size <= index:
        size *= 2
    grown = np.zeros(size, dtype=np.int8)
    grown[: cells.shape[0]] = cells
    return grown
