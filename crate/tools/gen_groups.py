#!/usr/bin/env python3
"""Regenerate the bundled permutation-group generator files.

Points use the labelings documented in the crate:
  * 24 points: 0..22 = GF(23), 23 = infinity (Golay code as extended QR code).
  * 12 points: 0..10 = GF(11), 11 = infinity (ternary Golay code as extended QR code).
Every group is reduced to two generators; the order is recorded and checked.
"""
import hashlib
import itertools
import random
import sys

from sympy.combinatorics import Permutation, PermutationGroup

random.seed(20240101)


def perm(images):
    return Permutation(list(images))


def cycles(p, n):
    seen = [False] * n
    out = []
    for s in range(n):
        if seen[s] or p.array_form[s] == s:
            seen[s] = True
            continue
        c = [s]
        seen[s] = True
        x = p.array_form[s]
        while x != s:
            c.append(x)
            seen[x] = True
            x = p.array_form[x]
        out.append("(" + " ".join(map(str, c)) + ")")
    return "".join(out) if out else "()"


def two_generators(group, order, n, tries=2000):
    for _ in range(tries):
        a = group.random()
        b = group.random()
        if PermutationGroup([a, b]).order() == order:
            return [a, b]
    raise SystemExit("no 2-generator set found")


def restrict(p, n):
    arr = p.array_form
    assert all(arr[i] < n for i in range(n))
    return Permutation(arr[:n])


def write(name, title, provenance, n, gens, order):
    lines = [cycles(g, n) for g in gens]
    body = "\n".join(lines) + "\n"
    digest = hashlib.sha256(body.encode()).hexdigest()
    with open(name, "w") as f:
        f.write(f"# {title}\n")
        f.write(f"# provenance: {provenance}\n")
        f.write("# version: 1\n")
        f.write(f"# order: {order}\n")
        f.write(f"# sha256: {digest}\n")
        f.write(f"degree {n}\n")
        f.write(body)


# ---------- M24 ----------
p = 23
INF = 23
Q = sorted({(x * x) % p for x in range(1, p)})


def inv(x, m):
    return pow(x, m - 2, m)


def pl_map(f, m):
    return [f(x) for x in range(m)] + [f(None)]


def mob(a, b, c, d, m):
    inf = m

    def f(x):
        if x is None:
            return inf if c == 0 else (a * inv(c, m)) % m
        den = (c * x + d) % m
        if den == 0:
            return inf
        return ((a * x + b) * inv(den, m)) % m

    return [f(x) for x in range(m)] + [f(None)]


alpha = mob(1, 1, 0, 1, p)
beta = mob(2, 0, 0, 1, p)
gamma = mob(0, -1 % p, 1, 0, p)
delta = []
for x in range(p):
    if x == 0:
        delta.append(0)
    elif x in Q:
        delta.append((pow(x, 3, p) * inv(9, p)) % p)
    else:
        delta.append((9 * pow(x, 3, p)) % p)
delta.append(INF)

m24 = PermutationGroup([perm(alpha), perm(beta), perm(gamma), perm(delta)])
assert m24.order() == 244823040, m24.order()

# Golay code: span of translates of the parity-extended QR word; check invariance.
def golay_octads():
    for base in (set(Q), set(range(1, p)) - set(Q)):
        rows = []
        for s in range(p):
            sup = {(s + x) % p for x in base | {0}}
            w = 0
            for x in sup:
                w |= 1 << x
            if len(sup) % 2 == 1:
                w |= 1 << INF
            rows.append(w)
        # all-ones word too
        rows.append((1 << 24) - 1)
        basis = []
        for r in rows:
            for b in basis:
                r = min(r, r ^ b)
            if r:
                basis.append(r)
                basis.sort(reverse=True)
        if len(basis) != 12:
            continue
        words = {0}
        for b in basis:
            words |= {w ^ b for w in words}
        if min(bin(w).count("1") for w in words if w) != 8:
            continue
        octads = {w for w in words if bin(w).count("1") == 8}
        ok = True
        for g in (alpha, beta, gamma, delta):
            for o in octads:
                im = 0
                for i in range(24):
                    if o >> i & 1:
                        im |= 1 << g[i]
                if im not in octads:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return base, basis, octads
    raise SystemExit("no invariant Golay code")


qr_base, golay_basis, octads = golay_octads()
assert len(octads) == 759
print("golay base", sorted(qr_base), file=sys.stderr)

m24_gens = two_generators(m24, 244823040, 24)
write("m24.grp", "Mathieu group M24 on 24 points (0..22 = GF(23), 23 = infinity)",
      "two random elements of <x+1, 2x, -1/x, x^3/9 on squares | 9x^3 on non-squares> acting on PL(23)",
      24, m24_gens, 244823040)

m23 = m24.stabilizer(INF)
assert m23.order() == 10200960
m23_gens = [restrict(g, 23) for g in two_generators(m23, 10200960, 24)]
write("m23.grp", "Mathieu group M23 on 23 points (stabiliser of infinity in M24)",
      "two random elements of the point stabiliser of 23 in the bundled M24",
      23, m23_gens, 10200960)

m23_full = PermutationGroup([restrict(g, 23) for g in m23.generators])
m22 = m23_full.stabilizer(22)
assert m22.order() == 443520
m22_gens = [restrict(g, 22) for g in two_generators(m22, 443520, 23)]
write("m22.grp", "Mathieu group M22 on 22 points (stabiliser of 22 in M23)",
      "two random elements of the point stabiliser of 22 in the bundled M23",
      22, m22_gens, 443520)

# Golay generator matrix in reduced echelon form (data for the code constructor).
rows = []
for s in range(p):
    sup = {(s + x) % p for x in qr_base | {0}}
    w = 0
    for x in sup:
        w |= 1 << x
    if len(sup) % 2 == 1:
        w |= 1 << INF
    rows.append(w)
rows.append((1 << 24) - 1)
basis = []
for r in rows:
    for b in basis:
        if r & (1 << (b.bit_length() - 1)):
            r ^= b
    if r:
        for i, b in enumerate(basis):
            if b & (1 << (r.bit_length() - 1)):
                basis[i] = b ^ r
        basis.append(r)
basis.sort(reverse=True)
assert len(basis) == 12
with open("golay24.txt", "w") as f:
    f.write("# Extended binary Golay code, generator matrix (12 x 24), reduced echelon form\n")
    f.write("# provenance: span of the cyclic translates of {0} u {squares mod 23}, parity-extended at coordinate 23\n")
    f.write("# columns are coordinates 0..23 left to right\n")
    for b in basis:
        f.write("".join("1" if b >> i & 1 else "0" for i in range(24)) + "\n")

# ---------- M12 ----------
p = 11
INF = 11
Q11 = sorted({(x * x) % p for x in range(1, p)})
g = [2, 0, 1, 2, 1, 1]  # x^5 + x^4 + 2x^3 + x^2 + 2 (low to high)


def ternary_code():
    rows = []
    for s in range(6):
        w = [0] * 11
        for i, c in enumerate(g):
            w[(i + s) % 11] = c
        rows.append(w)
    words = []
    for coeffs in itertools.product(range(3), repeat=6):
        w = [0] * 11
        for c, r in zip(coeffs, rows):
            if c:
                for i in range(11):
                    w[i] = (w[i] + c * r[i]) % 3
        words.append(w + [(-sum(w)) % 3])
    return words


words = ternary_code()
assert min(sum(1 for x in w if x) for w in words if any(w)) == 6
hexads = set()
for w in words:
    if sum(1 for x in w if x) == 6:
        hexads.add(frozenset(i for i in range(12) if w[i]))
assert len(hexads) == 132
hexad_of = {}
for h in hexads:
    for five in itertools.combinations(sorted(h), 5):
        hexad_of[frozenset(five)] = h
assert len(hexad_of) == 792


def preserves(images, blocks):
    return all(frozenset(images[x] for x in b) in blocks for b in blocks)


def closure(img):
    img = dict(img)
    changed = True
    while changed and len(img) < 12:
        changed = False
        known = sorted(img)
        for five in itertools.combinations(known, 5):
            h = hexad_of[frozenset(five)]
            (x,) = h - set(five)
            hi = hexad_of[frozenset(img[y] for y in five)]
            (y,) = hi - {img[z] for z in five}
            if x in img:
                if img[x] != y:
                    return None
            elif y in img.values():
                return None
            else:
                img[x] = y
                changed = True
                break
    return img


def extend(images5):
    img = closure(images5)
    if img is None:
        return None
    if len(img) == 12:
        images = [img[i] for i in range(12)]
        if sorted(images) == list(range(12)) and preserves(images, hexads):
            return images
        return None
    x = min(set(range(12)) - set(img))
    for y in sorted(set(range(12)) - set(img.values())):
        trial = dict(img)
        trial[x] = y
        res = extend(trial)
        if res is not None:
            return res
    return None


psl_ops = [mob(1, 1, 0, 1, p), mob(3, 0, 0, 1, p), mob(0, -1 % p, 1, 0, p)]
psl12 = [perm(x) for x in psl_ops]
for x in psl_ops:
    assert preserves(x, hexads), "PSL(2,11) does not preserve hexads"
assert PermutationGroup(psl12).order() == 660
extra = None
for t in itertools.permutations(range(12), 5):
    cand = extend(dict(zip(range(5), t)))
    if cand is not None and not PermutationGroup(psl12).contains(perm(cand)):
        extra = cand
        break
m12 = PermutationGroup(psl12 + [perm(extra)])
assert m12.order() == 95040
m12_gens = two_generators(m12, 95040, 12)
for x in m12_gens:
    assert preserves(x.array_form, hexads)
base = sorted(next(h for h in hexads if h == frozenset([INF] + Q11)) if frozenset([INF] + Q11) in hexads else min(sorted(h) for h in hexads))
print("m12 base hexad", base, file=sys.stderr)
write("m12.grp", "Mathieu group M12 on 12 points (0..10 = GF(11), 11 = infinity)",
      "two random elements of <PSL(2,11), one extra automorphism of the extended ternary QR code hexads>",
      12, m12_gens, 95040)

m11 = m12.stabilizer(INF)
assert m11.order() == 7920
m11_gens = [restrict(x, 11) for x in two_generators(m11, 7920, 12)]
write("m11.grp", "Mathieu group M11 on 11 points (stabiliser of infinity in M12)",
      "two random elements of the point stabiliser of 11 in the bundled M12",
      11, m11_gens, 7920)

# Transitive M11 on 12 points: the bundled M11 permutes the 12 biplanes (2-(11,5,2))
# formed from blocks of the derived Witt design S(4,5,11).
witt11 = [frozenset(h - {INF}) for h in hexads if INF in h]
assert len(witt11) == 66


def biplane_search(chosen, start):
    if len(chosen) == 11:
        return list(chosen)
    for i in range(start, len(witt11)):
        b = witt11[i]
        if all(len(b & c) == 2 for c in chosen):
            res = biplane_search(chosen + [b], i + 1)
            if res:
                return res
    return None


bp = frozenset(biplane_search([], 0))
m11_on11 = [restrict(x, 11) for x in m11.generators]
orbit = [bp]
index = {bp: 0}
k = 0
while k < len(orbit):
    cur = orbit[k]
    for x in m11_on11:
        im = frozenset(frozenset(x.array_form[y] for y in b) for b in cur)
        if im not in index:
            index[im] = len(orbit)
            orbit.append(im)
    k += 1
assert len(orbit) == 12, len(orbit)
coset_gens = []
for x in m11_gens:
    images = [index[frozenset(frozenset(x.array_form[y] for y in b) for b in cur)] for cur in orbit]
    coset_gens.append(perm(images))
m11t = PermutationGroup(coset_gens)
assert m11t.order() == 7920 and m11t.is_transitive()
write("m11_12.grp", "Mathieu group M11 in its transitive action on 12 points",
      "action of the bundled M11 generators on the orbit of 12 biplanes 2-(11,5,2) built from blocks of S(4,5,11)",
      12, coset_gens, 7920)

# ---------- PSL(2,11) on 11 points: automorphisms of the QR biplane ----------
blocks = {frozenset((s + x) % 11 for x in Q11) for s in range(11)}
assert len(blocks) == 11
autos = []


def search(img, used):
    i = len(img)
    if i == 11:
        autos.append(list(img))
        return
    for y in range(11):
        if y in used:
            continue
        img.append(y)
        ok = True
        for b in blocks:
            if max(b) == i:
                if frozenset(img[z] for z in b) not in blocks:
                    ok = False
                    break
        if ok:
            search(img, used | {y})
        img.pop()


search([], frozenset())
assert len(autos) == 660, len(autos)
l2 = PermutationGroup([perm(a) for a in autos[:40]] + [perm([(x + 1) % 11 for x in range(11)])])
assert l2.order() == 660
assert l2.is_transitive()
l2_gens = two_generators(l2, 660, 11)
write("l2_11.grp", "PSL(2,11) in its 2-transitive action on 11 points",
      "two random elements of the automorphism group of the biplane {translates of the squares mod 11}",
      11, l2_gens, 660)
print("done", file=sys.stderr)
