"""The order-2^11 group acting on BS(m,n), and the NN-elementary moves.

Group elements are kept in the normal form eps-block, phi-block,
sigma-block, psi; composition pushes generators right-to-left through
the semidirect-product relations (which depend on the parities of m and
n, so the group is instantiated per (m,n)).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .codec import QUAD_BY_LABEL
from .seqcore import Quadruple, alpha, alternate, negate, reverse

GENERATOR_NAMES = (
    "eps1", "eps2", "eps3", "eps4",
    "phi1", "phi2", "phi3", "phi4",
    "sig1", "sig2", "psi",
)


class OrbitSizeExceeded(RuntimeError):
    pass


def _check_mn(q: Quadruple):
    if q.m == q.n:
        raise ValueError("group action requires m != n")


def apply_generator(name: str, q: Quadruple) -> Quadruple:
    """Action of a single generator: eps_i negates the i-th sequence,
    phi_i reverses it, sig1 swaps A,B, sig2 swaps C,D, psi alternates
    all four."""
    _check_mn(q)
    a, b, c, d = q.a, q.b, q.c, q.d
    if name == "eps1":
        a = negate(a)
    elif name == "eps2":
        b = negate(b)
    elif name == "eps3":
        c = negate(c)
    elif name == "eps4":
        d = negate(d)
    elif name == "phi1":
        a = reverse(a)
    elif name == "phi2":
        b = reverse(b)
    elif name == "phi3":
        c = reverse(c)
    elif name == "phi4":
        d = reverse(d)
    elif name == "sig1":
        a, b = b, a
    elif name == "sig2":
        c, d = d, c
    elif name == "psi":
        a, b, c, d = alternate(a), alternate(b), alternate(c), alternate(d)
    else:
        raise ValueError(f"unknown generator {name!r}")
    return Quadruple(a, b, c, d)


@dataclass(frozen=True)
class GroupElem:
    """Normal form eps1^e1..eps4^e4 phi1^f1..phi4^f4 sig1^s1 sig2^s2 psi^p."""

    eps: tuple
    phi: tuple
    sig: tuple
    psi: int

    def is_identity(self) -> bool:
        return not (any(self.eps) or any(self.phi) or any(self.sig) or self.psi)


IDENTITY = GroupElem((0, 0, 0, 0), (0, 0, 0, 0), (0, 0), 0)


def _swap(t: tuple, i: int, j: int) -> tuple:
    lst = list(t)
    lst[i], lst[j] = lst[j], lst[i]
    return tuple(lst)


@dataclass(frozen=True)
class Group:
    """The group of order 2^11 acting on BS(m,n), m != n."""

    m: int
    n: int

    def __post_init__(self):
        if self.m == self.n:
            raise ValueError("group is only defined for m != n")

    def identity(self) -> GroupElem:
        return IDENTITY

    def generator(self, name: str) -> GroupElem:
        if name not in GENERATOR_NAMES:
            raise ValueError(f"unknown generator {name!r}")
        if name == "psi":
            return GroupElem((0, 0, 0, 0), (0, 0, 0, 0), (0, 0), 1)
        kind, idx = name[:3], int(name[3]) - 1
        if kind == "eps":
            e = [0, 0, 0, 0]
            e[idx] = 1
            return GroupElem(tuple(e), (0, 0, 0, 0), (0, 0), 0)
        if kind == "phi":
            f = [0, 0, 0, 0]
            f[idx] = 1
            return GroupElem((0, 0, 0, 0), tuple(f), (0, 0), 0)
        s = [0, 0]
        s[idx] = 1
        return GroupElem((0, 0, 0, 0), (0, 0, 0, 0), tuple(s), 0)

    def generators(self) -> list:
        return [self.generator(name) for name in GENERATOR_NAMES]

    def compose(self, g: GroupElem, h: GroupElem) -> GroupElem:
        """Normal form of g*h (g applied after h)."""
        # psi phi_i = eps_i^(m-1) phi_i psi for i=1,2; eps_i^(n-1) for i=3,4
        k = ((self.m - 1) % 2,) * 2 + ((self.n - 1) % 2,) * 2
        eps_h = list(h.eps)
        if g.psi:
            for i in range(4):
                eps_h[i] ^= k[i] & h.phi[i]
        phi_h = h.phi
        # sigma conjugation swaps the index pairs (1,2) and (3,4)
        if g.sig[0]:
            eps_h = list(_swap(tuple(eps_h), 0, 1))
            phi_h = _swap(phi_h, 0, 1)
        if g.sig[1]:
            eps_h = list(_swap(tuple(eps_h), 2, 3))
            phi_h = _swap(phi_h, 2, 3)
        return GroupElem(
            tuple(g.eps[i] ^ eps_h[i] for i in range(4)),
            tuple(g.phi[i] ^ phi_h[i] for i in range(4)),
            tuple(g.sig[i] ^ h.sig[i] for i in range(2)),
            g.psi ^ h.psi,
        )

    def compose_word(self, names) -> GroupElem:
        """Product of generators listed left to right."""
        g = IDENTITY
        for name in names:
            g = self.compose(g, self.generator(name))
        return g

    def apply(self, g: GroupElem, q: Quadruple) -> Quadruple:
        """Apply the normal-form word, rightmost generator first."""
        _check_mn(q)
        if (q.m, q.n) != (self.m, self.n):
            raise ValueError(f"quadruple is in BS{(q.m, q.n)}, group is for BS{(self.m, self.n)}")
        if g.psi:
            q = apply_generator("psi", q)
        if g.sig[1]:
            q = apply_generator("sig2", q)
        if g.sig[0]:
            q = apply_generator("sig1", q)
        for i in range(4):
            if g.phi[i]:
                q = apply_generator(f"phi{i + 1}", q)
        for i in range(4):
            if g.eps[i]:
                q = apply_generator(f"eps{i + 1}", q)
        return q


# ---------------------------------------------------------------------------
# NN-elementary moves

NN_MOVES = (
    "negate_ab", "negate_c", "negate_d",
    "reverse_c", "reverse_d",
    "swap_ab", "swap_cd",
    "hat", "tilde",
    "alternate_all",
)

# moves realizable as group elements, hence preserving the BS-class
BS_COMPATIBLE_NN_MOVES = tuple(mv for mv in NN_MOVES if mv not in ("hat", "tilde"))


def hat_seq(a: tuple) -> tuple:
    """a_{n-1}, a_2, a_{n-3}, a_4, ..., a_1, a_n, a_{n+1}: the entries at
    odd positions 1,3,..,n-1 reversed among themselves, rest fixed."""
    n = len(a) - 1
    out = list(a)
    for i in range(0, n - 1, 2):  # 0-based odd positions 1,3,..,n-1
        out[i] = a[n - 2 - i]
    return tuple(out)


def tilde_cd(c: tuple, d: tuple) -> tuple:
    """Swap positions i and n+1-i in both C and D at every quad labeled
    4 or 5 (i.e. swap those two labels in the (C;D) encoding).  Works on
    raw sequences, so it is total even when the codec is not."""
    n = len(c)
    cc, dd = list(c), list(d)
    q4 = QUAD_BY_LABEL[4]
    q5 = QUAD_BY_LABEL[5]
    for i in range(n // 2):
        r = n - 1 - i
        pat = (c[i], c[r], d[i], d[r])
        if pat == q4 or pat == q5:
            cc[i], cc[r] = cc[r], cc[i]
            dd[i], dd[r] = dd[r], dd[i]
    return tuple(cc), tuple(dd)


def apply_nn_move(move: str, q: Quadruple) -> Quadruple:
    a, b, c, d = q.a, q.b, q.c, q.d
    if move == "negate_ab":
        a, b = negate(a), negate(b)
    elif move == "negate_c":
        c = negate(c)
    elif move == "negate_d":
        d = negate(d)
    elif move == "reverse_c":
        c = reverse(c)
    elif move == "reverse_d":
        d = reverse(d)
    elif move == "swap_ab":
        a, b = b, a
    elif move == "swap_cd":
        c, d = d, c
    elif move == "hat":
        a = hat_seq(a)
        b = alpha(a)
    elif move == "tilde":
        c, d = tilde_cd(c, d)
    elif move == "alternate_all":
        a, b, c, d = alternate(a), alternate(b), alternate(c), alternate(d)
    else:
        raise ValueError(f"unknown NN move {move!r}")
    return Quadruple(a, b, c, d)


def apply_nn_moves(moves, q: Quadruple) -> Quadruple:
    for mv in moves:
        q = apply_nn_move(mv, q)
    return q


def nn_neighbors(q: Quadruple) -> list:
    """Images of q under all ten concrete NN moves (values may repeat)."""
    return [apply_nn_move(mv, q) for mv in NN_MOVES]


def orbit_bfs(q: Quadruple, moves: str = "g", max_size: int = 4096) -> set:
    """Breadth-first closure of {q} under moves: "g" for the 11 group
    generators, "nn" for the 10 NN-elementary moves."""
    if moves == "g":
        step = [lambda x, name=name: apply_generator(name, x) for name in GENERATOR_NAMES]
    elif moves == "nn":
        step = [lambda x, mv=mv: apply_nn_move(mv, x) for mv in NN_MOVES]
    else:
        raise ValueError(f"moves must be 'g' or 'nn', got {moves!r}")
    seen = {q}
    frontier = deque([q])
    while frontier:
        cur = frontier.popleft()
        for f in step:
            nxt = f(cur)
            if nxt not in seen:
                if len(seen) >= max_size:
                    raise OrbitSizeExceeded(f"orbit exceeds max_size={max_size}")
                seen.add(nxt)
                frontier.append(nxt)
    return seen


# label involutions induced on CD quads (used by tests and the
# canonicalization correctness argument)
SWAP_CD_LABEL_MAP = {1: 1, 2: 7, 3: 3, 4: 5, 5: 4, 6: 6, 7: 2, 8: 8}
REVERSE_C_LABEL_MAP = {1: 1, 2: 2, 3: 4, 4: 3, 5: 6, 6: 5, 7: 7, 8: 8}
REVERSE_D_LABEL_MAP = {1: 1, 2: 2, 3: 5, 4: 6, 5: 3, 6: 4, 7: 7, 8: 8}
