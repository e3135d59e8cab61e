# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled brute-force scans used by the oracles.

Both functions visit every point of their search space; nothing is pruned.
"""

cdef enum:
    SEQ_CAP = 16

MAX_BOX_BOUND = 40
MAX_SEQ_LEN = SEQ_CAP


def exceptional_classes(int bound, h, k):
    """All (a; m1..m6) in the box |.| <= bound with D.D = -1, D.h = 1, D.k = -1.

    ``h`` and ``k`` are 7-tuples in (a; m) coordinates; the form is diag(1, -1 x 6).
    Returns ``(instances, solutions)``.
    """
    if bound < 0 or bound > MAX_BOX_BOUND:
        raise ValueError(f"bound must be in [0, {MAX_BOX_BOUND}], got {bound}")
    cdef long long H[7]
    cdef long long K[7]
    cdef int i
    for i in range(7):
        H[i] = h[i]
        K[i] = k[i]

    cdef int a, m1, m2, m3, m4, m5, m6
    cdef long long q0, q1, q2, q3, q4, q5
    cdef long long h0, h1, h2, h3, h4, h5
    cdef long long k0, k1, k2, k3, k4, k5
    cdef long long instances = 0
    out = []
    for a in range(-bound, bound + 1):
        q0 = <long long>a * a
        h0 = H[0] * a
        k0 = K[0] * a
        for m1 in range(-bound, bound + 1):
            q1 = q0 - <long long>m1 * m1
            h1 = h0 - H[1] * m1
            k1 = k0 - K[1] * m1
            for m2 in range(-bound, bound + 1):
                q2 = q1 - <long long>m2 * m2
                h2 = h1 - H[2] * m2
                k2 = k1 - K[2] * m2
                for m3 in range(-bound, bound + 1):
                    q3 = q2 - <long long>m3 * m3
                    h3 = h2 - H[3] * m3
                    k3 = k2 - K[3] * m3
                    for m4 in range(-bound, bound + 1):
                        q4 = q3 - <long long>m4 * m4
                        h4 = h3 - H[4] * m4
                        k4 = k3 - K[4] * m4
                        for m5 in range(-bound, bound + 1):
                            q5 = q4 - <long long>m5 * m5
                            h5 = h4 - H[5] * m5
                            k5 = k4 - K[5] * m5
                            for m6 in range(-bound, bound + 1):
                                if (q5 - <long long>m6 * m6 == -1
                                        and h5 - H[6] * m6 == 1
                                        and k5 - K[6] * m6 == -1):
                                    out.append((a, m1, m2, m3, m4, m5, m6))
                            instances += 2 * bound + 1
    return instances, out


# phases of the character scanner
cdef enum:
    LEAD = 0
    PRE = 1
    POS = 2
    POST = 3
    DEAD = 4


def s0_characters(int max_len, int lo, int hi, int target_s0):
    """Every raw sequence of length 1..max_len over [lo, hi] that is a valid character with s0 = target_s0.

    Validity is judged on the sequence with trailing zeros removed. Returns
    ``(instances, sequences)``.
    """
    if max_len < 1 or max_len > MAX_SEQ_LEN:
        raise ValueError(f"max_len must be in [1, {MAX_SEQ_LEN}], got {max_len}")
    if lo > hi:
        raise ValueError("empty entry range")
    cdef int vals[SEQ_CAP]
    cdef int phase[SEQ_CAP + 1]
    cdef int s0[SEQ_CAP + 1]
    cdef long long total[SEQ_CAP + 1]
    cdef int depth, v, p, ph, i
    cdef long long instances = 0
    out = []

    phase[0] = LEAD
    s0[0] = 0
    total[0] = 0
    depth = 0
    vals[0] = lo - 1
    # iterative depth-first walk; vals[depth] is the entry being tried at that depth
    while depth >= 0:
        vals[depth] += 1
        if vals[depth] > hi:
            depth -= 1
            continue
        v = vals[depth]
        ph = phase[depth]
        p = s0[depth]
        if ph == LEAD:
            if v == -1:
                p = depth + 1
            elif v < 0 or depth == 0:
                ph = DEAD
            elif v == 0:
                ph = PRE
            else:
                ph = POS
        elif ph == PRE:
            if v < 0:
                ph = DEAD
            elif v > 0:
                ph = POS
        elif ph == POS:
            if v < 0:
                ph = DEAD
            elif v == 0:
                ph = POST
        elif ph == POST:
            if v != 0:
                ph = DEAD
        phase[depth + 1] = ph
        s0[depth + 1] = p
        total[depth + 1] = total[depth] + v
        instances += 1
        if (total[depth + 1] == 0 and p == target_s0
                and (ph == POS or ph == POST)):
            out.append(tuple([vals[i] for i in range(depth + 1)]))
        if depth + 1 < max_len:
            depth += 1
            vals[depth] = lo - 1
    return instances, out
