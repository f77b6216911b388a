"""Exhaustive enumeration of NN(n) and its equivalence classes.

The search fixes a_1 = c_1 = d_1 = +1 (NegateAB / NegateC / NegateD are
class-preserving moves, so every class is still hit), buckets all
candidate C/D halves by their NPAF vector, and for each A joins buckets
whose NPAFs cancel N(A)+N(B) exactly.  Every hit is canonicalized; the
deduplicated canonical codes are the BS-class representatives, which a
union-find over the NN moves then merges into NN-equivalence classes.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .canon import canonicalize
from .codec import decode_nn, encode_nn, format_code, parse_code
from .seqcore import Quadruple, alpha, alt_sum, npaf, seq_sum
from .transform import NN_MOVES, apply_nn_move

MAX_EXHAUSTIVE_N = 16


class ResourceGuard(ValueError):
    """Requested size is outside the supported exhaustive range."""


def _check_n(n: int):
    if n % 2 != 0 or not (2 <= n <= MAX_EXHAUSTIVE_N):
        raise ResourceGuard(
            f"exhaustive enumeration supports even n in 2..{MAX_EXHAUSTIVE_N}, got {n}"
        )


class NpafIndex:
    """All binary sequences of length n bucketed by NPAF vector."""

    def __init__(self, n: int, buckets: dict):
        self.n = n
        self.buckets = buckets  # npaf tuple -> list of Seq

    @classmethod
    def build(cls, n: int) -> "NpafIndex":
        _check_n(n)
        buckets: dict = {}
        for bits in range(1 << n):
            s = tuple(1 - 2 * ((bits >> k) & 1) for k in range(n))
            buckets.setdefault(npaf(s), []).append(s)
        return cls(n, buckets)


def build_npaf_index(n: int) -> NpafIndex:
    return NpafIndex.build(n)


# ---------------------------------------------------------------------------
# vectorized half-spaces for the meet-in-the-middle join

def _first_plus_seqs(n: int) -> np.ndarray:
    """(2^(n-1), n) array of all +/-1 sequences with first element +1."""
    count = 1 << (n - 1)
    s = np.arange(count, dtype=np.int64)
    out = np.ones((count, n), dtype=np.int8)
    for k in range(n - 1):
        out[:, k + 1] = 1 - 2 * ((s >> k) & 1)
    return out


def _npaf_matrix(seqs: np.ndarray) -> np.ndarray:
    """Row-wise NPAF at lags 1..n-1, as int16."""
    n = seqs.shape[1]
    w = seqs.astype(np.int16)
    return np.stack(
        [(w[:, : n - i] * w[:, i:]).sum(axis=1) for i in range(1, n)], axis=1
    )


def _radix_weights(n: int) -> np.ndarray:
    """Mixed-radix weights encoding an NPAF vector into one int64.

    Lag i has |v_i| <= n-i and v_i == n-i (mod 2), so (v_i + n-i)//2
    ranges over 0..n-i; the product of the radices is n! < 2^63 for
    n <= 16.
    """
    weights = np.empty(n - 1, dtype=np.int64)
    acc = 1
    for i in range(1, n):
        weights[i - 1] = acc
        acc *= n - i + 1
    return weights


@dataclass
class _HalfIndex:
    n: int
    seq_tuples: list          # Seq for every first-plus sequence
    bounds: np.ndarray        # (n-1,) lag bounds n-i
    weights: np.ndarray       # mixed-radix weights
    codes: np.ndarray         # sorted distinct NPAF codes, (K,)
    vectors: np.ndarray       # distinct NPAF vectors, (K, n-1)
    buckets: list             # K lists of indices into seq_tuples


def _build_half_index(n: int) -> _HalfIndex:
    seqs = _first_plus_seqs(n)
    npafs = _npaf_matrix(seqs)
    bounds = np.array([n - i for i in range(1, n)], dtype=np.int16)
    weights = _radix_weights(n)
    all_codes = ((npafs + bounds) // 2).astype(np.int64) @ weights
    codes, first_idx, inverse = np.unique(
        all_codes, return_index=True, return_inverse=True
    )
    order = np.argsort(inverse, kind="stable")
    boundaries = np.searchsorted(inverse[order], np.arange(len(codes) + 1))
    buckets = [
        order[boundaries[k] : boundaries[k + 1]].tolist()
        for k in range(len(codes))
    ]
    seq_tuples = [tuple(int(v) for v in row) for row in seqs]
    return _HalfIndex(
        n, seq_tuples, bounds, weights, codes, npafs[first_idx], buckets
    )


def _a_candidates(n: int):
    """All A of length n+1 with a_1 = +1, each with B, the target NPAF
    for N_C + N_D, and a cheap sum-of-squares prune already applied."""
    ss_total = 2 * (2 * n + 1)
    two_even_squares = {
        c * c + d * d for c in range(0, n + 1, 2) for d in range(0, n + 1, 2)
    }
    for bits in range(1 << n):
        a = (1,) + tuple(1 - 2 * ((bits >> k) & 1) for k in range(n))
        b = alpha(a)
        rest = ss_total - seq_sum(a) ** 2 - seq_sum(b) ** 2
        if rest < 0 or rest not in two_even_squares:
            continue
        na, nb = npaf(a), npaf(b)
        # lags 1..n-1 must cancel; lag n cancels automatically since
        # N_A(n) = a_1 a_{n+1} = -N_B(n)
        target = tuple(-(na[i] + nb[i]) for i in range(n - 1))
        yield a, b, target


def _enumerate_chunk(n: int, half: _HalfIndex, a_items: list) -> set:
    """Canonical codes of all hits for the given A candidates."""
    bounds, weights = half.bounds, half.weights
    codes, vectors, buckets = half.codes, half.vectors, half.buckets
    seq_tuples = half.seq_tuples
    found = set()
    for a, b, target in a_items:
        t = np.asarray(target, dtype=np.int16)
        need = t[None, :] - vectors  # required N_C given N_D = vectors[k]
        valid = (np.abs(need) <= bounds).all(axis=1)
        if not valid.any():
            continue
        d_idx = np.nonzero(valid)[0]
        need_codes = ((need[d_idx] + bounds) // 2).astype(np.int64) @ weights
        pos = np.searchsorted(codes, need_codes)
        pos[pos >= len(codes)] = 0
        hit = codes[pos] == need_codes
        for k, p in zip(d_idx[hit], pos[hit]):
            for ci in buckets[p]:
                c = seq_tuples[ci]
                for di in buckets[k]:
                    q = Quadruple(a, b, c, seq_tuples[di])
                    found.add(format_code(encode_nn(canonicalize(q).result)))
    return found


_WORKER_HALF: _HalfIndex | None = None
_WORKER_N = 0


def _worker_init(n: int):
    global _WORKER_HALF, _WORKER_N
    _WORKER_HALF = _build_half_index(n)
    _WORKER_N = n


def _worker_chunk(a_items: list) -> set:
    return _enumerate_chunk(_WORKER_N, _WORKER_HALF, a_items)


def default_workers() -> int:
    env = os.environ.get("NNSEQ_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return 1


def enumerate_bs_canonical(n: int, workers: int | None = None) -> list:
    """Sorted canonical codes of every BS-class meeting NN(n)."""
    _check_n(n)
    if workers is None:
        workers = default_workers()
    a_items = list(_a_candidates(n))
    if workers <= 1 or len(a_items) < 64:
        half = _build_half_index(n)
        found = _enumerate_chunk(n, half, a_items)
    else:
        chunks = [a_items[i::workers] for i in range(workers)]
        found = set()
        with ProcessPoolExecutor(
            max_workers=workers, initializer=_worker_init, initargs=(n,)
        ) as pool:
            for part in pool.map(_worker_chunk, chunks):
                found |= part
    return sorted(found)


# ---------------------------------------------------------------------------
# NN-equivalence classes

@dataclass(frozen=True)
class ClassRecord:
    nn_class_id: int
    representative: str        # lexicographically least member code
    members_bs: tuple          # sorted canonical BS-rep codes in the class
    sums: tuple                # (sum A, sum B, sum C, sum D)
    alt_sums: tuple


class _UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        self.parent[self.find(y)] = self.find(x)


def partition_nn(reps) -> list:
    """Merge canonical BS representatives into NN-equivalence classes.

    The rep set must be move-closed: every NN move image, canonicalized,
    must already be present (anything else signals an enumeration bug).
    """
    reps = sorted(set(reps))
    uf = _UnionFind(reps)
    repset = set(reps)
    for code in reps:
        q = decode_nn(parse_code(code))
        for mv in NN_MOVES:
            image = format_code(
                encode_nn(canonicalize(apply_nn_move(mv, q)).result)
            )
            if image not in repset:
                raise RuntimeError(
                    f"move {mv} sends {code} to {image}, outside the rep set"
                )
            uf.union(code, image)
    groups: dict = {}
    for code in reps:
        groups.setdefault(uf.find(code), []).append(code)
    components = sorted(min(members) for members in groups.values())
    by_rep = {min(members): sorted(members) for members in groups.values()}
    records = []
    for i, rep in enumerate(components, start=1):
        q = decode_nn(parse_code(rep))
        records.append(
            ClassRecord(
                nn_class_id=i,
                representative=rep,
                members_bs=tuple(by_rep[rep]),
                sums=tuple(seq_sum(s) for s in (q.a, q.b, q.c, q.d)),
                alt_sums=tuple(alt_sum(s) for s in (q.a, q.b, q.c, q.d)),
            )
        )
    return records


def enumerate_nn_classes(n: int, workers: int | None = None) -> list:
    return partition_nn(enumerate_bs_canonical(n, workers=workers))
