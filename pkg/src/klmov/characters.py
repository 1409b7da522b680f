"""Symmetric-group and Brauer-algebra characters.

Symmetric-group characters come from the Murnaghan-Nakayama border-strip
recursion on beta-sets.  Littlewood-Richardson coefficients are computed by
transporting both Schur functions to the power-sum basis (one shared code
path, easy to validate against orthogonality).  Brauer characters on the
symmetric-group conjugacy classes are lifted from symmetric-group ones by

    chi_A(gamma_mu) = sum_{nu |- |mu|, nu >= A} (sum_beta c_{A beta}^nu)
                      chi_nu^{S_|mu|}(gamma_mu)

with beta ranging over partitions of |mu| - |A| all of whose parts are even
(the even-part reading reproduces the reference tables; the even-column one
does not).  Completed tables can be mirrored to a small JSON cache on disk.
"""

from __future__ import annotations

import json
import os
import tempfile
from fractions import Fraction
from functools import lru_cache

from .errors import ParityMismatch, SizeMismatch
from .partitions import (
    brauer_label_sizes,
    partitions_of,
    z_stat,
)

_CACHE_DIR = None
_CACHE_SCHEMA = "brauer-chars-v1"


def set_cache_dir(path):
    """Enable (path) or disable (None) the on-disk character table cache."""
    global _CACHE_DIR
    _CACHE_DIR = path
    if path:
        os.makedirs(path, exist_ok=True)
    _brauer_table_cached.cache_clear()


def _beta_set(lam):
    n = len(lam)
    return tuple(sorted(lam[i] + (n - 1 - i) for i in range(n)))


@lru_cache(maxsize=None)
def _mn(betas, mu):
    if not mu:
        return 1
    m = mu[0]
    rest = mu[1:]
    bs = set(betas)
    total = 0
    for b in betas:
        lo = b - m
        if lo >= 0 and lo not in bs:
            height = sum(1 for c in betas if lo < c < b)
            nb = tuple(sorted((bs - {b}) | {lo}))
            sub = _mn(nb, rest)
            if sub:
                total += -sub if height % 2 else sub
    return total


def sn_character(lam, mu):
    """Character of the S_n irreducible lam on the class of cycle type mu."""
    lam, mu = tuple(lam), tuple(mu)
    if sum(lam) != sum(mu):
        raise SizeMismatch(f"|{lam}| != |{mu}|")
    if not lam:
        return 1
    return _mn(_beta_set(lam), tuple(sorted(mu, reverse=True)))


def sn_table(n):
    """Full character table {(lam, mu): value} of S_n."""
    parts = partitions_of(n)
    return {(lam, mu): sn_character(lam, mu) for lam in parts for mu in parts}


def contains(outer, inner):
    """Young-diagram containment."""
    if len(inner) > len(outer):
        return False
    return all(outer[i] >= inner[i] for i in range(len(inner)))


@lru_cache(maxsize=None)
def lr_coefficient(lam, beta, nu):
    """Littlewood-Richardson coefficient, via the power-sum basis.

    c = sum_{mu, rho} chi_lam(mu) chi_beta(rho) chi_nu(mu u rho) / (z_mu z_rho)
    """
    lam, beta, nu = tuple(lam), tuple(beta), tuple(nu)
    if sum(lam) + sum(beta) != sum(nu):
        raise SizeMismatch("sizes must satisfy |lam| + |beta| = |nu|")
    if not beta:
        return 1 if lam == nu else 0
    if not lam:
        return 1 if beta == nu else 0
    total = Fraction(0)
    for mu in partitions_of(sum(lam)):
        cl = sn_character(lam, mu)
        if not cl:
            continue
        for rho in partitions_of(sum(beta)):
            cb = sn_character(beta, rho)
            if not cb:
                continue
            merged = tuple(sorted(mu + rho, reverse=True))
            cn = sn_character(nu, merged)
            if cn:
                total += Fraction(cl * cb * cn, z_stat(mu) * z_stat(rho))
    assert total.denominator == 1 and total >= 0, "LR coefficient must be a nonneg int"
    return int(total)


def brauer_labels(n):
    """Irreducible labels of the rank-n Brauer algebra: partitions of n, n-2, ..."""
    out = []
    for m in brauer_label_sizes(n):
        out.extend(partitions_of(m))
    return tuple(out)


def _even_partitions(m):
    # all parts even <=> halving gives a partition of m/2
    return tuple(tuple(2 * p for p in lam) for lam in partitions_of(m // 2))


def _brauer_character_raw(a, mu):
    n = sum(mu)
    diff = n - sum(a)
    if diff < 0 or diff % 2:
        raise ParityMismatch(f"|{mu}| - |{a}| must be even and nonnegative")
    if diff == 0:
        return sn_character(a, mu)
    total = 0
    for nu in partitions_of(n):
        if not contains(nu, a):
            continue
        mult = 0
        for beta in _even_partitions(diff):
            mult += lr_coefficient(a, beta, nu)
        if mult:
            total += mult * sn_character(nu, mu)
    return total


def _cache_path(n):
    return os.path.join(_CACHE_DIR, f"brauer_{n}.json")


def _compute_brauer_table(n):
    labels = brauer_labels(n)
    classes = partitions_of(n)
    return {(a, mu): _brauer_character_raw(a, mu) for a in labels for mu in classes}


def _load_brauer_table(n):
    path = _cache_path(n)
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
        if data.get("schema") != _CACHE_SCHEMA or data.get("n") != n:
            raise ValueError("schema mismatch")
        labels = [tuple(p) for p in data["labels"]]
        classes = [tuple(p) for p in data["classes"]]
        values = data["values"]
        if labels != list(brauer_labels(n)) or classes != list(partitions_of(n)):
            raise ValueError("label mismatch")
        table = {}
        for i, a in enumerate(labels):
            row = values[i]
            if len(row) != len(classes):
                raise ValueError("row length mismatch")
            for j, mu in enumerate(classes):
                if not isinstance(row[j], int):
                    raise ValueError("non-integer entry")
                table[(a, mu)] = row[j]
        return table
    except (OSError, ValueError, KeyError, TypeError, json.JSONDecodeError):
        return None


def _store_brauer_table(n, table):
    labels = brauer_labels(n)
    classes = partitions_of(n)
    data = {
        "schema": _CACHE_SCHEMA,
        "n": n,
        "labels": [list(a) for a in labels],
        "classes": [list(mu) for mu in classes],
        "values": [[table[(a, mu)] for mu in classes] for a in labels],
    }
    # atomic publication: write then rename
    fd, tmp = tempfile.mkstemp(dir=_CACHE_DIR, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            json.dump(data, fh)
        os.replace(tmp, _cache_path(n))
    except OSError:
        try:
            os.unlink(tmp)
        except OSError:
            pass


@lru_cache(maxsize=None)
def _brauer_table_cached(n):
    if _CACHE_DIR:
        table = _load_brauer_table(n)
        if table is not None:
            return table
    table = _compute_brauer_table(n)
    if _CACHE_DIR:
        _store_brauer_table(n, table)
    return table


def brauer_character(a, mu):
    """Character of the Brauer irreducible labeled a on the class gamma_mu."""
    a, mu = tuple(a), tuple(mu)
    n = sum(mu)
    diff = n - sum(a)
    if diff < 0 or diff % 2:
        raise ParityMismatch(f"|{mu}| - |{a}| must be even and nonnegative")
    mu = tuple(sorted(mu, reverse=True))
    return _brauer_table_cached(n)[(a, mu)]


def brauer_table(n):
    """Completed table {(label, class): value} for the rank-n Brauer algebra."""
    return dict(_brauer_table_cached(n))


def multi_character(avec, mu):
    """Product of component-wise Brauer characters."""
    if len(avec) != len(mu):
        raise SizeMismatch("component counts differ")
    out = 1
    for a, m in zip(avec, mu):
        out *= brauer_character(a, m)
        if not out:
            return 0
    return out
