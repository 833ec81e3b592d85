"""Independent brute-force oracles used to derive and check expected
values.  These deliberately avoid the library's code paths: membership
is tested by direct divisibility scans over full monomial enumerations,
minimality by pairwise filtering."""

def all_monomials(n, k):
    if n == 1:
        return [(k,)]
    out = []
    for a in range(k + 1):
        for rest in all_monomials(n - 1, k - a):
            out.append((a,) + rest)
    return out


def divides(g, m):
    return all(a <= b for a, b in zip(g, m))


def brute_minimalize(gens):
    """Pairwise divisibility filter (quadratic, no sorting tricks)."""
    gens = list(dict.fromkeys(tuple(g) for g in gens))
    kept = []
    for g in gens:
        if not any(h != g and divides(h, g) for h in gens):
            kept.append(g)
    # among equal elements keep one copy; drop anything divided by another
    return set(kept)


def brute_standard_monomials(gens, n, k):
    return [m for m in all_monomials(n, k)
            if not any(divides(g, m) for g in gens)]


def brute_hilbert(gens, n, kmax=60):
    out = []
    for k in range(kmax):
        h = len(brute_standard_monomials(gens, n, k))
        if h == 0:
            return tuple(out)
        out.append(h)
    raise AssertionError("quotient did not terminate; not Artinian?")


def brute_ideal_equal(gens_a, gens_b, n, deg):
    """Degreewise membership comparison up to the given degree."""
    for k in range(deg + 1):
        for m in all_monomials(n, k):
            if any(divides(g, m) for g in gens_a) != any(
                divides(g, m) for g in gens_b
            ):
                return False
    return True


def nmp_exhaustive(left_masks, a_size, b_size):
    """Check |V| * |P_{k+1}| <= |shadow(V)| * |P_k| for every subset V of
    the left level; left_masks[i] is the bitmask of i's upper neighbours.
    Subset DP over shadows."""
    total = 1 << a_size
    shadow = [0] * total
    for v in range(1, total):
        low = v & -v
        shadow[v] = shadow[v ^ low] | left_masks[low.bit_length() - 1]
    for v in range(1, total):
        if bin(v).count("1") * b_size > bin(shadow[v]).count("1") * a_size:
            return False
    return True


def brute_max_lym_violation(levels, comp):
    """Largest antichain LYM sum via full enumeration; levels maps each
    flat element to its level size, comp[i] is the comparability mask."""
    from fractions import Fraction

    n = len(levels)
    best = Fraction(0)
    stack = [(0, (1 << n) - 1, Fraction(0))]
    while stack:
        start, allowed, s = stack.pop()
        best = max(best, s)
        for u in range(start, n):
            if allowed >> u & 1:
                stack.append((u + 1, allowed & ~comp[u],
                              s + Fraction(1, levels[u])))
    return best
