import pytest

from facecrypt.core.container import (
    HEADER_SIZE,
    deserialize_container,
    looks_like_container,
    serialize_container,
)
from facecrypt.core.exceptions import (
    BadMagicError,
    ContainerError,
    ContainerLayoutError,
    TruncatedContainerError,
    UnsupportedVersionError,
)
from facecrypt.models.container import CipherContainer


def make_container(width=33, height=20, pad_w=64, pad_h=32) -> CipherContainer:
    n = pad_w * pad_h
    return CipherContainer(
        orig_width=width,
        orig_height=height,
        padded_width=pad_w,
        padded_height=pad_h,
        masked_faps=bytes(i % 251 for i in range(4 * n)),
        cipher_pixels=bytes((7 * i) % 256 for i in range(n)),
    )


def test_round_trip():
    c = make_container()
    assert deserialize_container(serialize_container(c)) == c


def test_layout():
    c = make_container()
    data = serialize_container(c)
    assert data[:4] == b"FACE"
    assert data[4] == 1
    assert int.from_bytes(data[5:9], "little") == 33
    assert int.from_bytes(data[9:13], "little") == 20
    assert int.from_bytes(data[13:17], "little") == 64
    assert int.from_bytes(data[17:21], "little") == 32
    assert len(data) == HEADER_SIZE + 5 * 64 * 32
    assert data[HEADER_SIZE:HEADER_SIZE + 4 * 64 * 32] == c.masked_faps
    assert data[-64 * 32:] == c.cipher_pixels
    assert looks_like_container(data)


def test_bad_magic():
    data = bytearray(serialize_container(make_container()))
    data[0:4] = b"FACF"
    with pytest.raises(BadMagicError, match="bad magic"):
        deserialize_container(bytes(data))


def test_unsupported_version():
    data = bytearray(serialize_container(make_container()))
    data[4] = 0xFF
    with pytest.raises(UnsupportedVersionError, match="unsupported version"):
        deserialize_container(bytes(data))


@pytest.mark.parametrize("keep", [0, 3, HEADER_SIZE - 1, HEADER_SIZE, HEADER_SIZE + 100, -1])
def test_truncated(keep):
    data = serialize_container(make_container())
    with pytest.raises(TruncatedContainerError, match="truncated"):
        deserialize_container(data[:keep])


def test_trailing_bytes_rejected():
    data = serialize_container(make_container()) + b"\x00"
    with pytest.raises(ContainerLayoutError):
        deserialize_container(data)


def test_distinct_errors_share_a_base():
    for cls in (BadMagicError, UnsupportedVersionError, TruncatedContainerError):
        assert issubclass(cls, ContainerError)
    assert len({BadMagicError, UnsupportedVersionError, TruncatedContainerError}) == 3


def test_unaligned_padded_dimensions_rejected():
    with pytest.raises(ContainerLayoutError):
        make_container(pad_w=48)


def test_padded_smaller_than_original_rejected():
    with pytest.raises(ContainerLayoutError):
        make_container(width=70, pad_w=64)


def test_header_declaring_unaligned_body_rejected():
    data = bytearray(serialize_container(make_container()))
    # 64x32 body reinterpreted as 32x64 stays consistent; 16x128 breaks alignment
    data[13:17] = (16).to_bytes(4, "little")
    data[17:21] = (128).to_bytes(4, "little")
    with pytest.raises(ContainerLayoutError):
        deserialize_container(bytes(data))


def test_payload_length_mismatch_rejected():
    c = make_container()
    with pytest.raises(ContainerLayoutError):
        CipherContainer(
            orig_width=c.orig_width,
            orig_height=c.orig_height,
            padded_width=c.padded_width,
            padded_height=c.padded_height,
            masked_faps=c.masked_faps[:-4],
            cipher_pixels=c.cipher_pixels,
        )
