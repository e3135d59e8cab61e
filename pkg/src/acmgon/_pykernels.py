"""Pure-Python versions of the oracle scans.

Same signatures and results as the compiled module, but found by pruned search:
the box scan walks only vectors on the sphere ``sum(m_i^2) = a^2 + 1``, and the
character scan cuts subtrees that can no longer validate, adding their sizes to
the instance count analytically.
"""
from __future__ import annotations

MAX_BOX_BOUND = 40
MAX_SEQ_LEN = 16

LEAD, PRE, POS, POST, DEAD = range(5)


def exceptional_classes(bound: int, h, k):
    if bound < 0 or bound > MAX_BOX_BOUND:
        raise ValueError(f"bound must be in [0, {MAX_BOX_BOUND}], got {bound}")
    h, k = tuple(h), tuple(k)
    span = range(-bound, bound + 1)
    out = []
    m = [0] * 6

    def walk(i: int, budget: int, a: int):
        if i == 6:
            if budget != 0:
                return
            hd = h[0] * a - sum(h[j + 1] * m[j] for j in range(6))
            kd = k[0] * a - sum(k[j + 1] * m[j] for j in range(6))
            if hd == 1 and kd == -1:
                out.append((a, *m))
            return
        for v in span:
            if v * v <= budget:
                m[i] = v
                walk(i + 1, budget - v * v, a)

    for a in span:
        walk(0, a * a + 1, a)
    out.sort()
    return (2 * bound + 1) ** 7, out


def _step(phase: int, s0: int, depth: int, v: int) -> tuple[int, int]:
    if phase == LEAD:
        if v == -1:
            return LEAD, depth + 1
        if v < 0 or depth == 0:
            return DEAD, s0
        return (PRE if v == 0 else POS), s0
    if phase == PRE:
        if v < 0:
            return DEAD, s0
        return (POS if v > 0 else PRE), s0
    if phase == POS:
        if v < 0:
            return DEAD, s0
        return (POST if v == 0 else POS), s0
    if phase == POST:
        return (POST if v == 0 else DEAD), s0
    return DEAD, s0


def s0_characters(max_len: int, lo: int, hi: int, target_s0: int):
    if max_len < 1 or max_len > MAX_SEQ_LEN:
        raise ValueError(f"max_len must be in [1, {MAX_SEQ_LEN}], got {max_len}")
    if lo > hi:
        raise ValueError("empty entry range")
    width = hi - lo + 1
    # subtree[r] = number of proper descendants of a node with r levels left below it
    subtree = [0] * (max_len + 1)
    for r in range(1, max_len + 1):
        subtree[r] = width * (1 + subtree[r - 1])

    out = []
    instances = 0
    prefix: list[int] = []

    def walk(depth: int, phase: int, s0: int, total: int):
        nonlocal instances
        for v in range(lo, hi + 1):
            ph, p = _step(phase, s0, depth, v)
            t = total + v
            instances += 1
            prefix.append(v)
            if t == 0 and p == target_s0 and ph in (POS, POST):
                out.append(tuple(prefix))
            remaining = max_len - depth - 1
            # entries after the leading run are >= 0, so a positive total never returns to 0
            hopeless = ph == DEAD or p > target_s0 or (ph != LEAD and t > 0)
            if remaining:
                if hopeless:
                    instances += subtree[remaining]
                else:
                    walk(depth + 1, ph, p, t)
            prefix.pop()

    walk(0, LEAD, 0, 0)
    out.sort()
    return instances, out
