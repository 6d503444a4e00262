import numpy as np
import pytest

from oppm.seqio import MAGIC, read_sequence, write_sequence


@pytest.mark.parametrize("dtype", [np.int32, np.int64, np.float64])
@pytest.mark.parametrize("mode", ["text", "binary"])
def test_roundtrip(tmp_path, dtype, mode):
    x = np.array([3, -1, 4, 1, 5, 100], dtype=dtype)
    if dtype is np.float64:
        x = x + 0.25
    path = tmp_path / "seq.dat"
    write_sequence(path, x, mode=mode)
    back = read_sequence(path)
    assert (back == x).all()
    if mode == "binary":
        assert back.dtype == x.dtype


def test_binary_header_layout(tmp_path):
    path = tmp_path / "seq.bin"
    write_sequence(path, np.array([1, 2], dtype=np.int32), mode="binary")
    raw = path.read_bytes()
    assert raw[:4] == MAGIC
    assert raw[4] == 0  # i32 code
    assert int.from_bytes(raw[5:13], "little") == 2
    assert len(raw) == 13 + 2 * 4


def test_text_integer_stays_integer(tmp_path):
    path = tmp_path / "seq.txt"
    path.write_text("1 2 3\n4\n")
    got = read_sequence(path)
    assert got.dtype == np.int64
    assert got.tolist() == [1, 2, 3, 4]


def test_text_floats(tmp_path):
    path = tmp_path / "seq.txt"
    path.write_text("1.5 -2.25 3\n")
    got = read_sequence(path)
    assert got.dtype == np.float64
    assert got.tolist() == [1.5, -2.25, 3.0]


def test_truncated_binary_rejected(tmp_path):
    path = tmp_path / "seq.bin"
    write_sequence(path, np.arange(10, dtype=np.int64), mode="binary")
    path.write_bytes(path.read_bytes()[:-3])
    with pytest.raises(ValueError, match="bytes"):
        read_sequence(path)


def test_empty_text_rejected(tmp_path):
    path = tmp_path / "seq.txt"
    path.write_text("")
    with pytest.raises(ValueError, match="empty"):
        read_sequence(path)
