"""Block decomposition model used by the permutation and confusion stages."""

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True, eq=False)
class BlockGrid:
    """
    Square blocks of one image, enumerated row-major over the block grid.

    blocks has shape (k, block_size, block_size) with k = grid_rows * grid_cols.
    """

    block_size: int
    grid_rows: int
    grid_cols: int
    blocks: np.ndarray

    def __post_init__(self):
        expected = (self.grid_rows * self.grid_cols, self.block_size, self.block_size)
        if self.blocks.shape != expected:
            raise ValueError(f"blocks shape {self.blocks.shape} != {expected}")

    @property
    def count(self) -> int:
        return self.grid_rows * self.grid_cols

    @property
    def width(self) -> int:
        return self.grid_cols * self.block_size

    @property
    def height(self) -> int:
        return self.grid_rows * self.block_size

    def with_blocks(self, blocks: np.ndarray) -> "BlockGrid":
        return BlockGrid(self.block_size, self.grid_rows, self.grid_cols, blocks)
