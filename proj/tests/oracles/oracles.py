"""Independent oracles for the frozen values in the C++ test suites.

Everything here is brute force: plain Gaussian elimination over F_p on
Python lists, enumeration of tuples, explicit group tables. Nothing is
shared with the C++ implementation. Run with `python3 oracles.py`; the
printed values are the ones hard-coded in tests/*.cpp.
"""

import itertools
from math import comb, factorial
from fractions import Fraction


def rank_mod_p(rows, p):
    m = [list(r) for r in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        piv = None
        for r in range(rank, len(m)):
            if m[r][c] % p:
                piv = r
                break
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][c], p - 2, p)
        for r in range(len(m)):
            if r != rank and m[r][c] % p:
                f = m[r][c] * inv % p
                m[r] = [(a - f * b) % p for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank


def torus_matrix():
    return [
        [1, 0, 1, 0, 1, 1, 0, 0],
        [0, 1, 0, 1, 1, 1, 0, 0],
        [1, 0, 1, 0, 0, 0, 1, 1],
        [0, 1, 0, 1, 0, 0, 1, 1],
    ]


# --- groups as explicit tables -------------------------------------------

def cyclic(n):
    return [[(a + b) % n for b in range(n)] for a in range(n)]


def ring_mul(table, p, u, v):
    out = [0] * len(table)
    for g, ug in enumerate(u):
        for h, vh in enumerate(v):
            out[table[g][h]] = (out[table[g][h]] + ug * vh) % p
    return out


def delta_dims(table, p, kmax):
    """dim Delta^k via the spanning set Phi^(k) of all k-fold products."""
    n = len(table)
    gens = []
    for h in range(n):
        v = [0] * n
        v[0] = (v[0] - 1) % p
        v[h] = (v[h] + 1) % p
        gens.append(v)
    dims = [n]
    span = gens
    for k in range(1, kmax + 1):
        if k > 1:
            span = [ring_mul(table, p, a, b) for a in span for b in gens]
            # keep a basis only, to stop blow-up
            span = basis(span, p)
        dims.append(rank_mod_p(span, p) if span else 0)
    return dims


def basis(rows, p):
    out = []
    for r in rows:
        if rank_mod_p(out + [r], p) > len(out):
            out.append(r)
    return out


# --- omega ----------------------------------------------------------------

def omega_enum(p, r, k):
    return sum(1 for t in itertools.product(range(p), repeat=r) if sum(t) == k)


def omega_partitions(p, r, m):
    total = Fraction(0)

    def parts(rem, maxp):
        if rem == 0:
            yield []
            return
        for n in range(min(rem, maxp), 0, -1):
            for rest in parts(rem - n, n):
                yield [n] + rest

    for alpha in parts(m, p - 1):
        counts = {}
        for a in alpha:
            counts[a] = counts.get(a, 0) + 1
        L = 1
        for l in counts.values():
            L *= factorial(l)
        s = len(alpha)
        if s > r:
            continue
        total += Fraction(factorial(r), factorial(r - s) * L)
    assert total.denominator == 1
    return int(total)


def pi_value(p, r, k):
    om = [omega_enum(p, r, i) for i in range(r * (p - 1) + 1)]
    return (r - 1) * om[k] - sum(om[k + 1:])


# --- Fox calculus / covers (independent re-derivation) ---------------------

def word(s):
    """'a b A B' style: lowercase = +1, uppercase = -1."""
    out = []
    for ch in s.split():
        out.append((ch.lower(), 1 if ch.islower() else -1))
    return out


def cover_betti(gens, rels, images, table, p):
    """Betti numbers of the cover by direct cell enumeration.

    Cells: vertices g, edges (g, j) from g to g*phi(a_j), faces (g, i).
    The boundary of face (g, i) is read by walking the relator from vertex g.
    """
    H = len(table)
    n = len(gens)
    idx = {g: j for j, g in enumerate(gens)}
    inv = [next(b for b in range(H) if table[a][b] == 0) for a in range(H)]
    d1 = []
    for j in range(n):
        for g in range(H):
            row = [0] * H
            row[table[g][images[j]]] += 1
            row[g] -= 1
            d1.append([x % p for x in row])
    d2 = []
    for rel in rels:
        for g in range(H):
            row = [0] * (H * n)
            cur = g
            for (name, e) in rel:
                j = idx[name]
                if e == 1:
                    row[j * H + cur] += 1
                    cur = table[cur][images[j]]
                else:
                    cur = table[cur][inv[images[j]]]
                    row[j * H + cur] -= 1
            assert cur == g
            d2.append([x % p for x in row])
    r1 = rank_mod_p(d1, p) if d1 else 0
    r2 = rank_mod_p(d2, p) if d2 else 0
    return H - r1, H * n - r1 - r2, H * len(rels) - r2


def elem_ab_table(p, r):
    elems = sorted(itertools.product(range(p), repeat=r),
                   key=lambda t: (sum(t), tuple(-x for x in t)))
    pos = {t: i for i, t in enumerate(elems)}
    table = [[pos[tuple((a + b) % p for a, b in zip(x, y))] for y in elems]
             for x in elems]
    return elems, pos, table


def main():
    print("torus rank over F_2:", rank_mod_p(torus_matrix(), 2))
    print("[[1,1],[1,0]] rank over F_2:", rank_mod_p([[1, 1], [1, 0]], 2))

    # ring_mul in F_3[Z_2]: (-1 + g)^2
    t = cyclic(2)
    print("(-e+g)^2 in F_3[Z_2]:", ring_mul(t, 3, [2, 1], [2, 1]))

    print("Z_4 over F_2 dims:", delta_dims(cyclic(4), 2, 5))
    print("Z_2 over F_3 dims:", delta_dims(cyclic(2), 3, 4))
    print("Z_4 over F_3 dims:", delta_dims(cyclic(4), 3, 4))
    print("Z_3 over F_2 dims:", delta_dims(cyclic(3), 2, 3))
    _, _, t22 = elem_ab_table(2, 2)
    print("(Z_2)^2 over F_2 dims:", delta_dims(t22, 2, 4))
    e8 = elem_ab_table(2, 3)[0]
    print("(Z_2)^3 order:", e8)
    _, _, t32 = elem_ab_table(3, 2)
    print("(Z_3)^2 over F_3 dims:", delta_dims(t32, 3, 5))

    print("omega(5,3,6) =", omega_enum(5, 3, 6))
    print("omega_partitions(2,5,3) =", omega_partitions(2, 5, 3))
    print("omega_partitions(3,3,2) =", omega_partitions(3, 3, 2))
    print("omega table (3,4):", [omega_enum(3, 4, k) for k in range(9)])
    print("omega table (5,3):", [omega_enum(5, 3, k) for k in range(13)])
    print("pi (2,r) rows:")
    for r in range(1, 7):
        print("  r=%d" % r, [pi_value(2, r, k) for k in range(r + 1)])
    print("pi (3,3):", [pi_value(3, 3, k) for k in range(7)])
    for r in range(1, 7):
        print("rank-central r=%d: lhs=%d rhs=%d" % (r, r * comb(r, r // 2), 3 * 2 ** (r - 1) - 2))

    # bounds examples
    lam = [1, 2, 1]
    print("bounds b1=2,d=1,(Z2)^2:",
          [1 + 2 * lam[k] + 1 * sum(lam[:k]) - 4 for k in range(3)])

    # covers
    print("torus/(Z2)^2 betti:",
          cover_betti(["a", "b"], [word("a b A B")], [1, 2], t22, 2))
    print("RP2/Z2 betti p=2:", cover_betti(["a"], [word("a a")], [1], cyclic(2), 2))
    print("Klein/Z3 p=3 betti:",
          cover_betti(["a", "b"], [word("a b a B")], [0, 1], cyclic(3), 3))
    print("F2 -> (Z2)^2 a,b->e1 betti:",
          cover_betti(["a", "b"], [], [1, 1], t22, 2))
    print("F2 -> Z2 betti:", cover_betti(["a", "b"], [], [1, 0], cyclic(2), 2))
    g2 = [word("a b A B c d C D")]
    _, pos4, t24 = elem_ab_table(2, 4)
    imgs = [pos4[(1, 0, 0, 0)], pos4[(0, 1, 0, 0)], pos4[(0, 0, 1, 0)], pos4[(0, 0, 0, 1)]]
    print("genus2/(Z2)^4 betti:", cover_betti(["a", "b", "c", "d"], g2, imgs, t24, 2))
    print("torus/Z4 (a->1,b->0) p=2 betti:",
          cover_betti(["a", "b"], [word("a b A B")], [1, 0], cyclic(4), 2))

    # Nielsen-Schreier predictions for the growth iteration from F_2, p = 2
    rank, seq = 2, [2]
    for _ in range(2):
        index = 2 ** rank
        rank = 1 + index * (rank - 1)
        seq.append(rank)
    print("F_2 growth b1 sequence:", seq)


if __name__ == "__main__":
    main()
