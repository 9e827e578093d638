"""Brute-force reference values frozen into the C++ tests.

Everything here works from the raw definitions (subsequence enumeration,
direct triple scans, naive polynomial algebra) and shares no code with the
library.  Run with `python3 tests/oracle/reference.py`.
"""
from itertools import combinations, product, permutations
from collections import Counter

REL = {
    '<': lambda a, b: a < b, '>': lambda a, b: a > b,
    '<=': lambda a, b: a <= b, '>=': lambda a, b: a >= b,
    '=': lambda a, b: a == b, '!=': lambda a, b: a != b,
    '-': lambda a, b: True,
}


def invseqs(n):
    return product(*[range(i) for i in range(1, n + 1)])


def avoids_triple(e, t):
    r1, r2, r3 = (REL[x] for x in t)
    for i, j, k in combinations(range(len(e)), 3):
        if r1(e[i], e[j]) and r2(e[j], e[k]) and r3(e[i], e[k]):
            return False
    return True


def iso(sub, p):
    return all((sub[a] < sub[b]) == (p[a] < p[b]) and (sub[a] == sub[b]) == (p[a] == p[b])
               for a in range(len(p)) for b in range(len(p)))


def contains(w, p):
    return any(iso([w[i] for i in c], p) for c in combinations(range(len(w)), len(p)))


def avoids_all(w, ps):
    return not any(contains(w, p) for p in ps)


def pat(s):
    return [int(c) for c in s]


def asc(e):
    return sum(1 for i in range(len(e) - 1) if e[i] < e[i + 1])


def des(e):
    return sum(1 for i in range(len(e) - 1) if e[i] > e[i + 1])


def dt(e):
    return tuple(sorted(e[i] for i in range(len(e) - 1) if e[i] > e[i + 1]))


def poly_of(stats):
    c = Counter(stats)
    return [c.get(k, 0) for k in range(max(c) + 1)] if c else []


def binom_poly(d):
    p = [1]
    for _ in range(d):
        p = [a + b for a, b in zip(p + [0], [0] + p)]
    return p


def gamma_vec(h, d):
    h = h + [0] * (d + 1 - len(h))
    g = []
    for k in range(d // 2 + 1):
        gk = h[k]
        g.append(gk)
        b = [0] * k + binom_poly(d - 2 * k)
        h = [x - gk * y for x, y in zip(h, b + [0] * (len(h) - len(b)))]
    assert all(x == 0 for x in h)
    return g


def tilde(e):
    n = len(e)
    A = {i for i in range(n - 1) if e[i] < e[i + 1]}
    if any(i in A and i + 1 in A for i in range(n - 2)):
        return False
    return n == 1 or e[n - 2] >= e[n - 1]


def main():
    T = ('>', '!=', '>')
    print('contains 0102 / 110:', contains([0, 1, 0, 2], pat('110')))
    print('avoid (0,1,1,0) (>=,!=,>):', avoids_triple((0, 1, 1, 0), ('>=', '!=', '>')))
    print('avoid (0,1,0,2) (>=,!=,>):', avoids_triple((0, 1, 0, 2), ('>=', '!=', '>')))
    c3 = [e for e in invseqs(3) if avoids_triple(e, ('>', '-', '>'))]
    print('(>,-,>) n=3 joint:', sorted(Counter((asc(e), dt(e)) for e in c3).items()))
    for k in range(2):
        print('tilde T n=3 k=%d:' % k, sum(1 for e in invseqs(3) if avoids_triple(e, T) and asc(e) == k and tilde(e)))
    names = {'A': ('>=', '!=', '>'), 'B': ('>', '!=', '>='), 'C': ('>', '-', '>'),
             'BC': ('>', '-', '>='), 'AB': ('>=', '!=', '>='), 'CA': ('>=', '-', '>'), 'T': T}
    abc = [pat(s) for s in ('201', '210', '110', '101', '100')]
    for n in range(1, 8):
        row = {k: sum(1 for e in invseqs(n) if avoids_triple(e, v)) for k, v in names.items()}
        row['ABC'] = sum(1 for e in invseqs(n) if avoids_all(e, abc))
        print('counts n=%d' % n, row)
    for n in range(1, 8):
        for name, members in (('CA', [e for e in invseqs(n) if avoids_triple(e, names['CA'])]),
                              ('ABC', [e for e in invseqs(n) if avoids_all(e, abc)])):
            h = poly_of([asc(e) for e in members])
            hp = h + [0] * (n - len(h))
            if hp != hp[::-1]:
                print('first asymmetric %s at n=%d:' % (name, n), h)
    for n in (3, 4, 5):
        for name in ('T', 'BC'):
            members = [e for e in invseqs(n) if avoids_triple(e, names[name])]
            h = poly_of([asc(e) for e in members])
            print('asc poly %s n=%d' % (name, n), h, 'gamma', gamma_vec(h, n - 1))
    p4 = [p for p in permutations(range(1, 5)) if avoids_all(p, [pat('2134'), pat('2143')])]
    h = poly_of([des(p) for p in p4])
    print('S_4(2134,2143) des', h, 'gamma', gamma_vec(h, 3))
    print('S_3 des', poly_of([des(p) for p in permutations(range(1, 4))]))
    # Fine binomial transform: 2/(1+x+sqrt(1-6x+5x^2)) via sympy
    import sympy
    x = sympy.symbols('x')
    s = sympy.series(2 / (1 + x + sympy.sqrt(1 - 6 * x + 5 * x ** 2)), x, 0, 13).removeO()
    print('fine', [sympy.Poly(s, x).coeff_monomial(x ** k) for k in range(13)])
    schr = [1]
    for m in range(1, 12):  # large Schroeder: S_m = S_{m-1} + sum S_k S_{m-1-k}
        schr.append(schr[m - 1] + sum(schr[k] * schr[m - 1 - k] for k in range(m)))
    print('schroeder', schr)
    # Lehmer of 312, and all-zero b-code preimage check is done in C++ via slices.
    e = (0, 1, 0, 0)
    print('profile 0100 asc/des/dt', [i + 1 for i in range(3) if e[i] < e[i + 1]],
          [i + 1 for i in range(3) if e[i] > e[i + 1]], dt(e))


if __name__ == '__main__':
    main()
