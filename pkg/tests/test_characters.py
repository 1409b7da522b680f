"""Symmetric-group and Brauer characters, and the table cache."""

import json
import os

import pytest

from klmov import characters
from klmov.characters import (
    brauer_character,
    brauer_labels,
    brauer_table,
    lr_coefficient,
    multi_character,
    sn_character,
)
from klmov.errors import ParityMismatch, SizeMismatch
from klmov.golden import BRAUER_EXTRA_ROWS, SN_TABLES
from klmov.partitions import partitions_of, z_stat


def test_sn_examples():
    assert sn_character((2, 2), (3, 1)) == -1
    assert sn_character((1, 1, 1), (2, 1)) == -1
    for n in range(1, 6):
        for mu in partitions_of(n):
            assert sn_character((n,), mu) == 1


def test_sn_tables_match_reference():
    for n, table in SN_TABLES.items():
        for (lam, mu), val in table.items():
            assert sn_character(lam, mu) == val


def test_sn_size_mismatch():
    with pytest.raises(SizeMismatch):
        sn_character((2,), (1, 1, 1))


def test_orthogonality():
    for n in range(2, 7):
        parts = partitions_of(n)
        for mu in parts:
            for nu in parts:
                s = sum(sn_character(l, mu) * sn_character(l, nu) for l in parts)
                assert s == (z_stat(mu) if mu == nu else 0)


def test_lr_examples():
    assert lr_coefficient((1, 1), (2,), (3, 1)) == 1
    assert lr_coefficient((1, 1), (2,), (2, 2)) == 0
    assert lr_coefficient((2, 1), (), (2, 1)) == 1


def test_lr_symmetry():
    for lam in partitions_of(2):
        for beta in partitions_of(3):
            for nu in partitions_of(5):
                assert lr_coefficient(lam, beta, nu) == lr_coefficient(beta, lam, nu)


def test_lr_dimension_count():
    # sum_nu c^nu_{lam beta} dim(nu) = binom(|lam|+|beta|, |lam|) dim(lam) dim(beta)
    from math import comb

    def dim(lam):
        return sn_character(lam, (1,) * sum(lam))

    for lam in partitions_of(2):
        for beta in partitions_of(3):
            lhs = sum(
                lr_coefficient(lam, beta, nu) * dim(nu) for nu in partitions_of(5)
            )
            assert lhs == comb(5, 2) * dim(lam) * dim(beta)


def test_brauer_examples():
    assert brauer_character((1, 1), (2, 2)) == -2
    assert brauer_character((), (4,)) == 1
    assert brauer_character((2,), (1, 1, 1, 1)) == 6
    assert brauer_character((), (2, 2)) == 3


def test_brauer_tables_match_reference():
    for n in (2, 3, 4):
        table = brauer_table(n)
        for (a, mu), val in {**SN_TABLES[n], **BRAUER_EXTRA_ROWS[n]}.items():
            assert table[(a, mu)] == val


def test_brauer_reduces_to_sn():
    for n in range(1, 7):
        for a in partitions_of(n):
            for mu in partitions_of(n):
                assert brauer_character(a, mu) == sn_character(a, mu)


def test_brauer_parity():
    with pytest.raises(ParityMismatch):
        brauer_character((1,), (2, 2))


def test_brauer_labels():
    assert brauer_labels(2) == ((2,), (1, 1), ())
    assert brauer_labels(1) == ((1,),)
    # partitions of 4, of 2, and of 0: 5 + 2 + 1
    assert len(brauer_labels(4)) == 8


def test_multi_character():
    assert multi_character(((2,), (1,)), ((2,), (1,))) == 1
    assert multi_character(((), (1,)), ((2,), (1,))) == 1
    with pytest.raises(ParityMismatch):
        multi_character(((1,), (1,)), ((2,), (1,)))


def test_disk_cache_roundtrip(tmp_path):
    characters.set_cache_dir(str(tmp_path))
    try:
        t1 = brauer_table(3)
        assert os.path.exists(tmp_path / "brauer_3.json")
        t2 = brauer_table(3)
        assert t1 == t2
    finally:
        characters.set_cache_dir(None)


def test_disk_cache_corruption_falls_back(tmp_path):
    characters.set_cache_dir(str(tmp_path))
    try:
        (tmp_path / "brauer_2.json").write_text("{not json")
        table = brauer_table(2)
        assert table[((), (2,))] == 1
        # the rewritten file is valid again
        data = json.loads((tmp_path / "brauer_2.json").read_text())
        assert data["schema"] == "brauer-chars-v1"
    finally:
        characters.set_cache_dir(None)
