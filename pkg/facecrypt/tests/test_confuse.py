import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from facecrypt.core.exceptions import UnalignedImageError
from facecrypt.models.chaos import ChaoticParams, Digest
from facecrypt.models.image import GrayImage
from facecrypt.services.chaos import hash_to_params, seed_matrix
from facecrypt.services.confuse import confuse_image, deconfuse_image, seed_chain
from facecrypt.services.permute import split_blocks
from facecrypt.tests.factories import random_image

INIT = ChaoticParams(0.7071067811865476, 3.97)


def test_zero_block_yields_seed_matrix():
    out = confuse_image(GrayImage.filled(16, 16), INIT)
    assert np.array_equal(out.pixels, seed_matrix(INIT))


def test_single_block_xor_involution():
    img = random_image(16, 16, seed=1)
    s = seed_matrix(INIT)
    assert np.array_equal(np.bitwise_xor(confuse_image(img, INIT).pixels, s), img.pixels)


def test_block_count_for_256_square():
    assert split_blocks(GrayImage.filled(256, 256), 16).count == 256


def test_seed_chain_rekeys_from_cipher_blocks():
    cipher = confuse_image(random_image(48, 32, seed=4), INIT)
    chain = seed_chain(cipher, INIT)
    blocks = split_blocks(cipher, 16).blocks
    assert len(chain) == 6
    for i in range(1, 6):
        assert chain[i] == hash_to_params(Digest.of(blocks[i - 1].tobytes()))


def test_each_block_uses_its_chain_seed():
    img = random_image(32, 32, seed=6)
    cipher = confuse_image(img, INIT)
    chain = seed_chain(cipher, INIT)
    plain_blocks = split_blocks(img, 16).blocks
    cipher_blocks = split_blocks(cipher, 16).blocks
    for i, params in enumerate(chain):
        assert np.array_equal(cipher_blocks[i], plain_blocks[i] ^ seed_matrix(params))


@settings(max_examples=15, deadline=None)
@given(
    st.integers(min_value=1, max_value=4),
    st.integers(min_value=1, max_value=4),
    st.integers(min_value=0, max_value=2**32 - 1),
)
def test_round_trip(rows, cols, seed):
    img = random_image(16 * cols, 16 * rows, seed=seed)
    assert deconfuse_image(confuse_image(img, INIT), INIT) == img


def test_unaligned_rejected():
    with pytest.raises(UnalignedImageError):
        confuse_image(GrayImage.filled(20, 16), INIT)


def test_change_propagates_forward_only():
    img = random_image(64, 16, seed=9)
    pixels = img.pixels.copy()
    pixels[3, 20] ^= 0x80  # block 1
    a = split_blocks(confuse_image(img, INIT), 16).blocks
    b = split_blocks(confuse_image(GrayImage(pixels), INIT), 16).blocks
    assert np.array_equal(a[0], b[0])
    assert int(np.count_nonzero(a[1] != b[1])) == 1
    assert np.count_nonzero(a[2] != b[2]) > 200
    assert np.count_nonzero(a[3] != b[3]) > 200
