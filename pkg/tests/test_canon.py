import random

import pytest

from nearnormal import canon, seqcore as sc, transform as tr
from nearnormal.codec import NotNearNormal, decode_nn, encode_nn, format_code, parse_code


def dec(text):
    return decode_nn(parse_code(text))


def test_is_canonical_examples():
    assert canon.is_canonical(dec("02;1"))
    # no 2s; the 3 at position 4 is preceded by the 6; no 7s and no 4s
    assert canon.is_canonical(dec("05850;1163"))
    assert not canon.is_canonical(tr.apply_nn_move("alternate_all", dec("02;1")))


def test_is_canonical_rejects_cd_starting_with_6():
    q = tr.apply_nn_move("alternate_all", dec("050;16"))
    from nearnormal.codec import quad_labels

    assert quad_labels(q.c, q.d)[0] == 6
    assert not canon.is_canonical(q)


def test_is_canonical_requires_near_normal():
    worked = sc.Quadruple(
        sc.from_string("++++--+-+"), sc.from_string("+++-+++--"),
        sc.from_string("++--+--+"), sc.from_string("++++-+-+"),
    )
    with pytest.raises(NotNearNormal):
        canon.is_canonical(worked)
    with pytest.raises(NotNearNormal):
        canon.canonicalize(worked)


def test_canonicalize_fixed_point():
    q = dec("02;1")
    w = canon.canonicalize(q)
    assert w.result == q
    assert w.moves == ()


def test_canonicalize_examples():
    q = dec("02;1")
    w = canon.canonicalize(tr.apply_nn_move("negate_c", q))
    assert w.result == q

    q4 = dec("050;16")
    moved = tr.apply_nn_move("negate_ab", q4)  # eps1 eps2 image
    assert canon.canonicalize(moved).result == q4


def test_witness_replay(nn_members_small):
    for members in nn_members_small.values():
        for q in members[:150]:
            w = canon.canonicalize(q)
            assert tr.apply_nn_moves(w.moves, q) == w.result
            assert canon.is_canonical(w.result)


def test_idempotence(nn_members_small):
    for members in nn_members_small.values():
        for q in members[:150]:
            r = canon.canonicalize(q).result
            again = canon.canonicalize(r)
            assert again.result == r
            assert again.moves == ()


def test_move_invariance_random_prefixes(nn_members_small):
    rng = random.Random(99)
    for members in nn_members_small.values():
        for _ in range(120):
            q = rng.choice(members)
            base = canon.canonicalize(q).result
            moved = q
            for _ in range(rng.randint(1, 6)):
                moved = tr.apply_nn_move(
                    rng.choice(tr.BS_COMPATIBLE_NN_MOVES), moved
                )
            assert canon.canonicalize(moved).result == base


def test_orbit_uniqueness_small(nn_members_small):
    """Each G-orbit meets NN(n) in exactly one canonical member."""
    for n in (2, 4):
        seen_reps = set()
        for q in nn_members_small[n]:
            rep = canon.canonicalize(q).result
            key = format_code(encode_nn(rep))
            if key in seen_reps:
                continue
            seen_reps.add(key)
            orbit = tr.orbit_bfs(rep, "g", max_size=2048)
            canonical = [
                m for m in orbit
                if sc.is_near_normal(m) and canon.is_canonical(m)
            ]
            assert canonical == [rep]


def test_bs_equivalence_implies_nn_equivalence(nn_members_small):
    """Every canonicalization move is an NN move, so BS-equivalent NN
    members canonicalize identically; spot-check via G-orbits."""
    rng = random.Random(5)
    for n in (2, 4, 6):
        for _ in range(20):
            q = rng.choice(nn_members_small[n])
            rep = canon.canonicalize(q).result
            orbit = tr.orbit_bfs(q, "g", max_size=2048)
            nn_in_orbit = [m for m in orbit if sc.is_near_normal(m)]
            assert all(canon.canonicalize(m).result == rep for m in nn_in_orbit)
