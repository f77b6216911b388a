import itertools
import random

import pytest

from nearnormal.seqcore import Quadruple, alpha, is_base_sequences


def rand_seq(rng: random.Random, length: int) -> tuple:
    return tuple(rng.choice((1, -1)) for _ in range(length))


def rand_quadruple(rng: random.Random, n: int) -> Quadruple:
    """Random lengths-(n+1,n+1,n,n) quadruple, not necessarily valid."""
    return Quadruple(
        rand_seq(rng, n + 1), rand_seq(rng, n + 1),
        rand_seq(rng, n), rand_seq(rng, n),
    )


def brute_force_nn(n: int, fix_a1: bool = True) -> list:
    """All members of NN(n) by direct triple enumeration over (A,C,D),
    checking NPAF cancellation at every lag (independent of the
    meet-in-the-middle search path)."""
    from nearnormal.seqcore import npaf

    a_heads = [(1,)] if fix_a1 else [(1,), (-1,)]
    halves = list(itertools.product((1, -1), repeat=n))
    npaf_half = [npaf(h) for h in halves]
    members = []
    for head in a_heads:
        for a_tail in itertools.product((1, -1), repeat=n):
            a = head + a_tail
            b = alpha(a)
            na, nb = npaf(a), npaf(b)
            u = tuple(na[i] + nb[i] for i in range(n))
            if any(u[n - 1:]):  # lags >= n must already cancel
                continue
            for ci, c in enumerate(halves):
                nc = npaf_half[ci]
                need = tuple(-(u[i] + nc[i]) for i in range(n - 1))
                for di, d in enumerate(halves):
                    if npaf_half[di] == need:
                        q = Quadruple(a, b, c, d)
                        assert is_base_sequences(q)
                        members.append(q)
    return members


@pytest.fixture(scope="session")
def nn_members_small():
    """All NN(n) members with a_1 = +1 for n = 2, 4, 6."""
    return {n: brute_force_nn(n) for n in (2, 4, 6)}
