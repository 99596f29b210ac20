"""Independent reference implementations the library is checked against.

Nothing here imports the code paths under test beyond plain data types.
"""

from fractions import Fraction
from itertools import combinations, permutations, product


def letters(word):
    """Expand a run-length word into single letters (gen, +-1)."""
    out = []
    for g, e in word.syllables:
        s = 1 if e > 0 else -1
        out.extend([(g, s)] * abs(e))
    return out


def naive_reduce(seq):
    stack = []
    for g, s in seq:
        if stack and stack[-1] == (g, -s):
            stack.pop()
        else:
            stack.append((g, s))
    return stack


def naive_inverse(seq):
    return [(g, -s) for g, s in reversed(seq)]


def naive_commutator_trivial(u, v):
    a, b = letters(u), letters(v)
    return naive_reduce(a + b + naive_inverse(a) + naive_inverse(b)) == []


def cofactor_det(rows):
    rows = [list(r) for r in rows]
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    total = 0
    for j in range(n):
        if rows[0][j] == 0:
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        total += (-1) ** j * rows[0][j] * cofactor_det(minor)
    return total


def fraction_rank(rows):
    """Row echelon form with Fraction pivots, no fraction-free tricks."""
    m = [[Fraction(x) for x in r] for r in rows]
    if not m:
        return 0
    cols = len(m[0])
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(r + 1, len(m)):
            f = m[i][c] / m[r][c]
            if f:
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return r


def sub(rows, ri, ci):
    return [[rows[i][j] for j in ci] for i in ri]


def full_rank(rows, ri, ci):
    return fraction_rank(sub(rows, ri, ci)) == len(ci) == len(ri)


def stage_feasible(rows, avail, cols, m, chosen):
    """Both rank conditions for choosing `chosen` from rows `avail` on columns `cols`."""
    rest = [i for i in avail if i not in chosen]
    if not full_rank(rows, chosen, cols[:m]):
        return False
    return not cols[m:] or full_rank(rows, rest, cols[m:])


def exhaustive_block_rows(rows, ranks):
    """Lexicographically least nested partition, by enumerating every subset at every stage.

    Returns None if some stage has no feasible subset.
    """
    n = len(rows)
    avail = list(range(n))
    cols = list(range(n))
    blocks = []
    for m in ranks:
        feasible = [S for S in combinations(avail, m) if stage_feasible(rows, avail, cols, m, S)]
        if not feasible:
            return None
        S = feasible[0]
        blocks.append(S)
        avail = [i for i in avail if i not in S]
        cols = cols[m:]
    return tuple(blocks)


def all_nested_partitions(rows, ranks):
    """Every ordered partition satisfying the nested conditions (tiny n only)."""
    n = len(rows)
    out = []

    def rec(avail, cols, i, acc):
        if i == len(ranks):
            out.append(tuple(acc))
            return
        m = ranks[i]
        for S in combinations(avail, m):
            if stage_feasible(rows, avail, cols, m, S):
                rec([a for a in avail if a not in S], cols[m:], i + 1, acc + [S])

    rec(list(range(n)), list(range(n)), 0, [])
    return out


def completion_exists(rows, m, partial):
    """Is there a first block J containing `partial` meeting both conditions?"""
    n = len(rows)
    cols = list(range(n))
    rest = [i for i in range(n) if i not in partial]
    for extra in combinations(rest, m - len(partial)):
        S = tuple(sorted(tuple(partial) + extra))
        if stage_feasible(rows, list(range(n)), cols, m, S):
            return True
    return False


def brute_colorable(n, edges, k):
    """Exhaustive enumeration of all k^n assignments."""
    if n == 0:
        return True
    for assignment in product(range(k), repeat=n):
        if all(assignment[u] != assignment[v] for u, v in edges):
            return True
    return False


def brute_chromatic(n, edges):
    return next(k for k in range(0 if n == 0 else 1, n + 1) if brute_colorable(n, edges, k))


def permutation_sign(p):
    sign = 1
    for i, j in combinations(range(len(p)), 2):
        if p[i] > p[j]:
            sign = -sign
    return sign


def leibniz_det(rows):
    n = len(rows)
    total = 0
    for p in permutations(range(n)):
        term = permutation_sign(p)
        for i in range(n):
            term *= rows[i][p[i]]
            if not term:
                break
        total += term
    return total
