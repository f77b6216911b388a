import random

import pytest

from nearnormal import seqcore as sc, transform as tr
from nearnormal.canon import canonicalize
from nearnormal.codec import decode_nn, encode_pair, parse_code, quad_labels

from conftest import rand_quadruple

Q2 = decode_nn(parse_code("02;1"))

# relations defining the group, as word pairs (parity exponents filled in
# per (m,n) inside the test)
def relation_words(m, n):
    rels = [
        (["sig1", "eps1"], ["eps2", "sig1"]),
        (["sig1", "phi1"], ["phi2", "sig1"]),
        (["sig2", "eps3"], ["eps4", "sig2"]),
        (["sig2", "phi3"], ["phi4", "sig2"]),
        (["sig1", "sig2"], ["sig2", "sig1"]),
        (["sig1", "eps3"], ["eps3", "sig1"]),
        (["sig1", "phi4"], ["phi4", "sig1"]),
        (["sig2", "eps1"], ["eps1", "sig2"]),
        (["sig2", "phi2"], ["phi2", "sig2"]),
    ]
    for i in (1, 2, 3, 4):
        rels.append(([f"eps{i}", "psi"], ["psi", f"eps{i}"]))
    for i, k in ((1, m - 1), (2, m - 1), (3, n - 1), (4, n - 1)):
        rhs = [f"eps{i}"] * (k % 2) + [f"phi{i}", "psi"]
        rels.append((["psi", f"phi{i}"], rhs))
    for x in tr.GENERATOR_NAMES:
        rels.append(([x, x], []))
    return rels


def test_apply_generator_examples():
    q = tr.apply_generator("eps3", Q2)
    assert q.c == (-1, -1)
    assert sc.is_base_sequences(q)

    q = tr.apply_generator("psi", Q2)
    assert q.a == sc.from_string("+++")
    assert q.b == sc.from_string("+--")
    assert q.c == sc.from_string("+-")
    assert q.d == sc.from_string("+-")

    assert tr.apply_generator("sig2", tr.apply_generator("sig2", Q2)) == Q2


def test_apply_generator_requires_m_ne_n():
    square = sc.Quadruple((1, 1), (1, 1), (1, 1), (1, 1))
    with pytest.raises(ValueError):
        tr.apply_generator("eps1", square)


def test_compose_relations_as_elements():
    for m, n in ((3, 2), (5, 4), (7, 6), (9, 8), (4, 7)):
        G = tr.Group(m, n)
        for lhs, rhs in relation_words(m, n):
            assert G.compose_word(lhs) == G.compose_word(rhs), (m, n, lhs, rhs)


def test_compose_examples():
    G = tr.Group(3, 2)
    assert G.compose_word(["sig1", "eps1"]) == G.compose_word(["eps2", "sig1"])
    # n even: psi phi3 = eps3 phi3 psi
    assert G.compose_word(["psi", "phi3"]) == G.compose_word(["eps3", "phi3", "psi"])
    for name in tr.GENERATOR_NAMES:
        g = G.generator(name)
        assert G.compose(g, g).is_identity()


def test_relations_act_identically():
    rng = random.Random(20240811)
    for n in (2, 4, 6, 8):
        G = tr.Group(n + 1, n)
        rels = relation_words(n + 1, n)
        for _ in range(100):
            q = rand_quadruple(rng, n)
            for lhs, rhs in rels:
                assert G.apply(G.compose_word(lhs), q) == G.apply(
                    G.compose_word(rhs), q
                ), (n, lhs, rhs)


def test_apply_group_element_functorial():
    rng = random.Random(7)
    for n in (2, 4, 6):
        G = tr.Group(n + 1, n)
        for _ in range(50):
            q = rand_quadruple(rng, n)
            w1 = [rng.choice(tr.GENERATOR_NAMES) for _ in range(rng.randint(0, 6))]
            w2 = [rng.choice(tr.GENERATOR_NAMES) for _ in range(rng.randint(0, 6))]
            g, h = G.compose_word(w1), G.compose_word(w2)
            assert G.apply(G.compose(g, h), q) == G.apply(g, G.apply(h, q))
    assert tr.Group(3, 2).apply(tr.IDENTITY, Q2) == Q2


def test_generators_preserve_base_sequences(nn_members_small):
    for members in nn_members_small.values():
        for q in members[:50]:
            for name in tr.GENERATOR_NAMES:
                assert sc.is_base_sequences(tr.apply_generator(name, q))


def test_single_eps_breaks_near_normality():
    q = tr.apply_generator("eps1", Q2)
    assert sc.is_base_sequences(q)
    assert not sc.is_near_normal(q)
    q = tr.apply_nn_move("negate_ab", Q2)
    assert sc.is_near_normal(q)


def test_hat():
    assert tr.hat_seq(sc.from_string("+-+")) == sc.from_string("+-+")  # n=2 identity
    assert tr.hat_seq(sc.from_string("++-+-")) == sc.from_string("-+++-")


def test_tilde():
    c = sc.from_string("++--+--+")
    d = sc.from_string("++++-+-+")
    cc, dd = tr.tilde_cd(c, d)
    assert encode_pair(cc, dd) == "1674"  # 5 -> 4, others fixed
    assert tr.tilde_cd(cc, dd) == (c, d)  # involution


def test_nn_moves_preserve_near_normality(nn_members_small):
    for members in nn_members_small.values():
        for q in members[:100]:
            for mv in tr.NN_MOVES:
                assert sc.is_near_normal(tr.apply_nn_move(mv, q))


def test_hat_tilde_preserve_npaf_sums(nn_members_small):
    for members in nn_members_small.values():
        for q in members[:100]:
            qh = tr.apply_nn_move("hat", q)
            ab = [x + y for x, y in zip(sc.npaf(q.a), sc.npaf(q.b))]
            abh = [x + y for x, y in zip(sc.npaf(qh.a), sc.npaf(qh.b))]
            assert ab == abh
            qt = tr.apply_nn_move("tilde", q)
            cd = [x + y for x, y in zip(sc.npaf(q.c), sc.npaf(q.d))]
            cdt = [x + y for x, y in zip(sc.npaf(qt.c), sc.npaf(qt.d))]
            assert cd == cdt


def test_nn_neighbors():
    nbrs = tr.nn_neighbors(Q2)
    assert len(nbrs) == 10
    assert all(sc.is_near_normal(x) for x in nbrs)
    assert Q2 in nbrs  # hat is the identity at n=2
    assert tr.apply_nn_move("negate_c", Q2) in nbrs


def test_cd_label_involutions(nn_members_small):
    for members in nn_members_small.values():
        for q in members[:60]:
            labels = quad_labels(q.c, q.d)
            for mv, table in (
                ("swap_cd", tr.SWAP_CD_LABEL_MAP),
                ("reverse_c", tr.REVERSE_C_LABEL_MAP),
                ("reverse_d", tr.REVERSE_D_LABEL_MAP),
            ):
                q2 = tr.apply_nn_move(mv, q)
                assert quad_labels(q2.c, q2.d) == tuple(table[v] for v in labels)


def test_orbit_bfs_sizes():
    orbit = tr.orbit_bfs(Q2, "g")
    assert len(orbit) == 128  # regression value, frozen from BFS
    assert 2048 % len(orbit) == 0
    # single-generator orbit has size 2
    q_neg = tr.apply_generator("eps3", Q2)
    assert q_neg in orbit


def test_orbit_bfs_max_size():
    with pytest.raises(tr.OrbitSizeExceeded):
        tr.orbit_bfs(Q2, "g", max_size=16)
    with pytest.raises(ValueError):
        tr.orbit_bfs(Q2, "bogus")


def test_nn_orbit_closure():
    orbit = tr.orbit_bfs(Q2, "nn", max_size=8192)
    assert all(sc.is_near_normal(q) for q in orbit)
    # the NN orbit of the class representative covers all of NN(2)
    canon_codes = {canonicalize(q).result for q in orbit}
    assert canon_codes == {Q2}
