"""
Hash-chained block permutation (stage 2).

Blocks of 32x32 are visited row-major over the block grid. Block i is shuffled by
the chaotic argsort drawn from params_i; the SHA-256 of the shuffled block seeds
params_{i+1}. The decryptor holds the shuffled blocks, so it can rebuild the
same chain before undoing each shuffle.
"""

import logging

import numpy as np

from facecrypt.core.exceptions import UnalignedImageError
from facecrypt.models.blocks import BlockGrid
from facecrypt.models.chaos import ChaoticParams, Digest
from facecrypt.models.image import GrayImage
from facecrypt.services.chaos import hash_to_params, permutation_sequence

logger = logging.getLogger(__name__)

PERMUTATION_BLOCK = 32


def split_blocks(img: GrayImage, b: int) -> BlockGrid:
    """Cut an image into b x b blocks, row-major over the grid."""
    if b < 1 or img.width % b or img.height % b:
        raise UnalignedImageError(
            f"unaligned image: {img.width}x{img.height} is not a multiple of {b}"
        )
    rows, cols = img.height // b, img.width // b
    blocks = img.pixels.reshape(rows, b, cols, b).swapaxes(1, 2).reshape(rows * cols, b, b)
    return BlockGrid(block_size=b, grid_rows=rows, grid_cols=cols, blocks=blocks.copy())


def merge_blocks(g: BlockGrid) -> GrayImage:
    """Exact inverse of split_blocks."""
    b = g.block_size
    pixels = g.blocks.reshape(g.grid_rows, g.grid_cols, b, b).swapaxes(1, 2)
    return GrayImage(pixels.reshape(g.height, g.width).astype(np.uint8))


def _block_digest(block: np.ndarray) -> Digest:
    return Digest.of(np.ascontiguousarray(block).tobytes())


def permute_image(img: GrayImage, init: ChaoticParams) -> GrayImage:
    """Gather-permute every 32x32 block: permuted[j] = original[pi_i[j]]."""
    grid = split_blocks(img, PERMUTATION_BLOCK)
    n = PERMUTATION_BLOCK * PERMUTATION_BLOCK
    out = np.empty_like(grid.blocks)

    params = init
    for i, block in enumerate(grid.blocks):
        pi = permutation_sequence(params, n)
        permuted = block.reshape(-1)[pi]
        out[i] = permuted.reshape(PERMUTATION_BLOCK, PERMUTATION_BLOCK)
        params = hash_to_params(_block_digest(permuted))

    logger.debug(f"Permuted {grid.count} blocks of {PERMUTATION_BLOCK}x{PERMUTATION_BLOCK}")
    return merge_blocks(grid.with_blocks(out))


def inverse_permute(img: GrayImage, init: ChaoticParams) -> GrayImage:
    """Scatter every block back; each block's digest is taken before it is undone."""
    grid = split_blocks(img, PERMUTATION_BLOCK)
    n = PERMUTATION_BLOCK * PERMUTATION_BLOCK
    out = np.empty_like(grid.blocks)

    params = init
    for i, block in enumerate(grid.blocks):
        permuted = block.reshape(-1)
        next_params = hash_to_params(_block_digest(permuted))
        pi = permutation_sequence(params, n)
        original = np.empty(n, dtype=np.uint8)
        original[pi] = permuted
        out[i] = original.reshape(PERMUTATION_BLOCK, PERMUTATION_BLOCK)
        params = next_params

    return merge_blocks(grid.with_blocks(out))


def permutation_chain(permuted: GrayImage, init: ChaoticParams) -> list[ChaoticParams]:
    """params_1..params_k of the chain, rebuilt from a permuted image alone."""
    grid = split_blocks(permuted, PERMUTATION_BLOCK)
    chain = [init]
    for block in grid.blocks[:-1]:
        chain.append(hash_to_params(_block_digest(block)))
    return chain
