import json
import random
from fractions import Fraction

import pytest

from qsu2.qarith import QScalar, QRadical, q_int, sqrt_scalar, ONE, Q
from qsu2.algebra import AlgebraElement, random_element
from qsu2.peterweyl import PWTable
from qsu2.fourier import FourierArray, fourier_transform
from qsu2.serialize import (
    scalar_to_json, scalar_from_json, element_to_json, element_from_json,
    fourier_array_to_json, fourier_array_from_json,
    pw_entry_to_json, pw_entry_from_json, dump_json, load_json, write_csv,
)


def test_scalar_roundtrip():
    samples = [ONE, Q, q_int(6), (Q ** 3 - 2) / (Q ** 2 + 1),
               sqrt_scalar(q_int(4)),
               sqrt_scalar(q_int(4)) + sqrt_scalar(q_int(6)).square() * 0 +
               sqrt_scalar(q_int(10))]
    for x in samples:
        data = scalar_to_json(x)
        # serializable to a real JSON string and back
        back = scalar_from_json(json.loads(json.dumps(data)))
        assert back == x


def test_float_scalar_roundtrip():
    x = 0.1 + 0.2
    assert scalar_from_json(scalar_to_json(x)) == x


def test_element_roundtrip_bit_exact():
    rng = random.Random(77)
    for _ in range(25):
        f = random_element(rng, 4, 5)
        back = element_from_json(json.loads(json.dumps(element_to_json(f))))
        assert back == f
        assert back.terms == f.terms


def test_fourier_array_roundtrip(tmp_path):
    pw = PWTable(6)
    rng = random.Random(78)
    f = random_element(rng, 3, 4)
    arr = fourier_transform(f, pw)
    data = fourier_array_to_json(arr)
    back = fourier_array_from_json(json.loads(json.dumps(data)))
    assert back == arr
    # through a file as well
    path = tmp_path / "arr.json"
    dump_json(data, path)
    assert fourier_array_from_json(load_json(path)) == arr


def test_pw_entry_roundtrip():
    pw = PWTable(4)
    data = pw_entry_to_json(pw, 2)
    back = pw_entry_from_json(json.loads(json.dumps(data)))
    assert back["entries"] == pw.entries(2)
    assert back["norm_sq"] == pw.norm_sq(2)


def test_json_files_deterministic(tmp_path):
    pw = PWTable(4)
    p1, p2 = tmp_path / "a.json", tmp_path / "b.json"
    dump_json(pw_entry_to_json(pw, 2), p1)
    dump_json(pw_entry_to_json(pw, 2), p2)
    assert p1.read_bytes() == p2.read_bytes()


def test_csv_deterministic(tmp_path):
    rows = [{"a": 1.5, "b": Fraction(1, 3), "c": "x"},
            {"a": 0.1 + 0.2, "b": Fraction(2), "c": "y"}]
    p1, p2 = tmp_path / "r1.csv", tmp_path / "r2.csv"
    write_csv(p1, ["a", "b", "c"], rows)
    write_csv(p2, ["a", "b", "c"], rows)
    assert p1.read_bytes() == p2.read_bytes()
    text = p1.read_text()
    assert "0.30000000000000004" in text   # repr round-trip floats
    assert "1/3" in text
