"""
Hash-chained XOR confusion (stage 3).

Blocks of 16x16 are XORed with a chaotic seed matrix; the SHA-256 of each
confused block re-keys the seed matrix of the next one.
"""

import logging

import numpy as np

from facecrypt.models.chaos import ChaoticParams, Digest
from facecrypt.models.image import GrayImage
from facecrypt.services.chaos import hash_to_params, seed_matrix
from facecrypt.services.permute import merge_blocks, split_blocks

logger = logging.getLogger(__name__)

CONFUSION_BLOCK = 16


def confuse_image(img: GrayImage, init: ChaoticParams) -> GrayImage:
    """C_i = B_i xor S_i, with S_{i+1} seeded from SHA-256(C_i)."""
    grid = split_blocks(img, CONFUSION_BLOCK)
    out = np.empty_like(grid.blocks)

    params = init
    for i, block in enumerate(grid.blocks):
        confused = np.bitwise_xor(block, seed_matrix(params))
        out[i] = confused
        params = hash_to_params(Digest.of(confused.tobytes()))

    logger.debug(f"Confused {grid.count} blocks of {CONFUSION_BLOCK}x{CONFUSION_BLOCK}")
    return merge_blocks(grid.with_blocks(out))


def deconfuse_image(img: GrayImage, init: ChaoticParams) -> GrayImage:
    """B_i = C_i xor S_i, the seed chain rebuilt from the ciphertext blocks."""
    grid = split_blocks(img, CONFUSION_BLOCK)
    out = np.empty_like(grid.blocks)

    params = init
    for i, confused in enumerate(grid.blocks):
        out[i] = np.bitwise_xor(confused, seed_matrix(params))
        params = hash_to_params(Digest.of(confused.tobytes()))

    return merge_blocks(grid.with_blocks(out))


def seed_chain(cipher: GrayImage, init: ChaoticParams) -> list[ChaoticParams]:
    """Seed parameters of every block, derived from ciphertext and init only."""
    grid = split_blocks(cipher, CONFUSION_BLOCK)
    chain = [init]
    for confused in grid.blocks[:-1]:
        chain.append(hash_to_params(Digest.of(confused.tobytes())))
    return chain
