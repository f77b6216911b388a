"""Canonical form for near-normal quadruples.

Every BS-class inside NN(n) contains exactly one member whose encoding
p_1..p_{m+1}; q_1..q_m satisfies:

  (i)   p_1 = 0 and q_1 = 1;
  (ii)  every q_j = 2 has some q_i = 7 with 1 < i < j;
  (iii) every q_j in {3,4,5} has some q_i = 6 with 1 < i < j;
  (iv)  if no q_k = 7 at all, every q_j = 4 has some q_i = 5 with 1 < i < j.

canonicalize() reaches that member constructively, using only
BS-compatible NN moves, and returns the move list as a replayable
witness.
"""

from __future__ import annotations

from dataclasses import dataclass

from .codec import LABEL_BY_QUAD, NotNearNormal, quad_labels
from .seqcore import Quadruple, is_near_normal
from .transform import apply_nn_move


class CanonicalizationError(RuntimeError):
    """The constructive procedure failed to reach a canonical form;
    indicates an implementation bug (uniqueness guarantees success)."""


def _cd_conditions(qd: tuple) -> bool:
    """Conditions (ii)-(iv) on the CD quad labels."""
    for j, lab in enumerate(qd):
        if lab == 2 and 7 not in qd[1:j]:
            return False
        if lab in (3, 4, 5) and 6 not in qd[1:j]:
            return False
    if 7 not in qd:
        for j, lab in enumerate(qd):
            if lab == 4 and 5 not in qd[1:j]:
                return False
    return True


def is_canonical(q: Quadruple) -> bool:
    if not is_near_normal(q):
        raise NotNearNormal("canonical form is defined on NN(n) only")
    n = q.n
    first_ab = (q.a[0], q.a[n], q.b[0], q.b[n])
    if LABEL_BY_QUAD.get(first_ab) != 0:
        return False
    qd = quad_labels(q.c, q.d)
    if qd[0] != 1:
        return False
    return _cd_conditions(qd)


@dataclass(frozen=True)
class CanonicalWitness:
    """Canonical representative plus the NN moves that reach it."""

    result: Quadruple
    moves: tuple


def canonicalize(q: Quadruple) -> CanonicalWitness:
    """Constructive canonical form of a near-normal quadruple.

    The result depends only on q's BS-class (each move applied is both
    an NN move and a group element).
    """
    if not is_near_normal(q):
        raise NotNearNormal("canonicalize is defined on NN(n) only")
    moves = []

    def do(mv):
        nonlocal q
        q = apply_nn_move(mv, q)
        moves.append(mv)

    # (i) on the AB side: the first AB quad of an NN member is
    # (+1, a_{n+1}, +1, -a_{n+1}) after a_1 = +1, so NegateAB/SwapAB
    # exhaust the four possible patterns and land on label 0.
    if q.a[0] == -1:
        do("negate_ab")
    if q.a[-1] == -1:
        do("swap_ab")

    # (i) on the CD side: with c_1 = d_1 = +1 the first quad is 1 or 6;
    # alternation fixes 6 -> 1 and leaves p_1 = 0 (n even).
    if q.c[0] == -1:
        do("negate_c")
    if q.d[0] == -1:
        do("negate_d")
    if quad_labels(q.c, q.d)[0] == 6:
        do("alternate_all")

    # (ii): SwapCD induces (2,7)(4,5) on quad labels.
    qd = quad_labels(q.c, q.d)
    first27 = next((lab for lab in qd if lab in (2, 7)), None)
    if first27 == 2:
        do("swap_cd")

    # (iii): make the first label from {3,4,5} into a 6 unless a 6
    # already precedes it; ReverseC induces (3,4)(5,6), ReverseD
    # (3,5)(4,6), and both fix 1,2,7,8.
    qd = quad_labels(q.c, q.d)
    j = next((j for j, lab in enumerate(qd) if lab in (3, 4, 5)), None)
    if j is not None and 6 not in qd[:j]:
        if qd[j] == 3:
            do("reverse_c")
            do("reverse_d")
        elif qd[j] == 4:
            do("reverse_d")
        else:
            do("reverse_c")

    # (iv): with no 7 present there is no 2 either, so SwapCD only
    # exchanges 4 and 5.
    qd = quad_labels(q.c, q.d)
    if 7 not in qd:
        first45 = next((lab for lab in qd if lab in (4, 5)), None)
        if first45 == 4:
            do("swap_cd")

    if not is_canonical(q):
        raise CanonicalizationError(
            f"procedure ended off canonical form (moves {moves})"
        )
    return CanonicalWitness(q, tuple(moves))
