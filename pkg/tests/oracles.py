"""Independent reference implementations used only by the tests.

Deliberately written with different algorithms than the package: recursive
partition enumeration instead of the iterative generator, division-based
Gaussian elimination instead of fraction-free Bareiss, polynomial
convolution instead of Faddeev-LeVerrier, brute-force multiset collection
instead of generating-function or recursive counting.
"""

import itertools
from fractions import Fraction


def naive_partitions(n, max_part=None):
    """All partitions of n as descending tuples, by simple recursion."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for k in range(min(n, max_part), 0, -1):
        for rest in naive_partitions(n - k, k):
            yield (k,) + rest


def naive_partition_count(n):
    return sum(1 for _ in naive_partitions(n))


def conjugate_by_transpose(parts):
    """Conjugate computed by literally transposing a 0/1 Ferrers matrix."""
    parts = tuple(parts)
    if not parts:
        return ()
    rows = len(parts)
    cols = parts[0]
    ferrers = [[1 if c < parts[r] else 0 for c in range(cols)]
               for r in range(rows)]
    transposed = [[ferrers[r][c] for r in range(rows)] for c in range(cols)]
    return tuple(sum(row) for row in transposed)


def canonical_groups(groups):
    """Canonical ordering used for multiset comparison of group tuples."""
    return tuple(sorted((tuple(g) for g in groups),
                        key=lambda g: (-sum(g), tuple(-x for x in g))))


def brute_force_segre_multisets(n):
    """Every distinct multiset of partitions of total weight n."""
    out = set()
    for outer in naive_partitions(n):
        pools = [list(naive_partitions(a)) for a in outer]
        for combo in itertools.product(*pools):
            out.add(canonical_groups(combo))
    return out


def poly_mul(a, b):
    """Convolution of integer coefficient lists (lowest degree first)."""
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def poly_from_linear_factors(roots):
    """Expand prod (x - r) over an iterable of integer roots."""
    acc = [1]
    for r in roots:
        acc = poly_mul(acc, [-r, 1])
    return acc


def gaussian_rank(rows):
    """Rank by plain division-based Gaussian elimination over Fraction."""
    m = [[Fraction(e) for e in row] for row in rows]
    if not m:
        return 0
    nrows, ncols = len(m), len(m[0])
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, nrows) if m[i][col]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        pr = m[r]
        for i in range(r + 1, nrows):
            if m[i][col]:
                factor = m[i][col] / pr[col]
                m[i] = [a - factor * b for a, b in zip(m[i], pr)]
        r += 1
        if r == nrows:
            break
    return r


def min_formula_ranks(blocks, n):
    """r_k = n - sum_i min(b_i, k), k = 0..max(blocks); the closed form."""
    top = max(blocks) if blocks else 0
    return tuple(n - sum(min(b, k) for b in blocks) for k in range(top + 1))
