"""Characters of symmetric groups and of the wreath products Z_n wr S_m."""
from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import permutations, product
from fractions import Fraction
from math import factorial, prod

from .cyclotomic import conj, simplify, xi
from .partitions import (NonEmptyCore, diagram_to_quotient, hook_lengths, mp_size,
                         multipartitions_of, partition, z_order)


class SizeMismatch(ValueError):
    pass


class ModulusMismatch(ValueError):
    pass


def _beta(shape, L):
    return [(shape[i] if i < len(shape) else 0) + L - 1 - i for i in range(L)]


@lru_cache(maxsize=None)
def char_sym(shape, cycle_type) -> int:
    """Murnaghan-Nakayama: chi^shape evaluated on a permutation of cycle_type."""
    shape, cycle_type = partition(shape), partition(cycle_type)
    if sum(shape) != sum(cycle_type):
        raise SizeMismatch(f"|{shape}| != |{cycle_type}|")
    if not cycle_type:
        return 1
    k, rest = cycle_type[0], cycle_type[1:]
    L = len(shape)
    beads = _beta(shape, L)
    occupied = set(beads)
    total = 0
    for b in beads:
        if b - k < 0 or (b - k) in occupied:
            continue
        # removing a rim hook of length k = sliding bead b to b - k;
        # its height is the number of beads jumped over
        height = sum(1 for c in beads if b - k < c < b)
        new = sorted((c if c != b else b - k for c in beads), reverse=True)
        sub = partition(c - (L - 1 - i) for i, c in enumerate(new))
        total += (-1) ** height * char_sym(sub, rest)
    return total


def dim_sym(shape) -> int:
    shape = partition(shape)
    return factorial(sum(shape)) // prod(hook_lengths(shape).values())


def _normalize(mu):
    return tuple(partition(c) for c in mu)


@lru_cache(maxsize=None)
def color_expansion(mu) -> dict:
    """Coefficients of prod_{j,i} (sum_c xi_n^{-jc} p^{(c)}_{mu^j_i}) in the
    colored power sums, keyed by the n-tuple nu of the monomial p_nu."""
    mu = _normalize(mu)
    n = len(mu)
    acc = {tuple(() for _ in range(n)): 1}
    for j, comp in enumerate(mu):
        for r in comp:
            nxt = {}
            for nu, coeff in acc.items():
                for c in range(n):
                    key = list(nu)
                    key[c] = partition(nu[c] + (r,))
                    key = tuple(key)
                    term = coeff * xi(n, -j * c) if n > 1 else coeff
                    nxt[key] = nxt.get(key, 0) + term
            acc = nxt
    return {nu: simplify(c) for nu, c in acc.items() if c}


def char_wreath(lam, mu):
    """chi_lam(mu) = sum_nu [p_nu] prod (sum_c xi^{-jc} p^{(c)}) * prod_c chi_{lam^c}(nu^c)."""
    lam, mu = _normalize(lam), _normalize(mu)
    if len(lam) != len(mu):
        raise ModulusMismatch(f"moduli {len(lam)} and {len(mu)} differ")
    if mp_size(lam) != mp_size(mu):
        raise SizeMismatch(f"|{lam}| != |{mu}|")
    total = 0
    for nu, a in color_expansion(mu).items():
        if any(sum(nu[c]) != sum(lam[c]) for c in range(len(lam))):
            continue
        total = total + a * prod(char_sym(lam[c], nu[c]) for c in range(len(lam)))
    return simplify(total) if not isinstance(total, int) else total


def dim_wreath(lam) -> int:
    lam = _normalize(lam)
    m = mp_size(lam)
    out = factorial(m)
    for c in lam:
        out //= factorial(sum(c))
    return out * prod(dim_sym(c) for c in lam)


def char_rect(shape, n: int) -> int:
    """chi^shape on the class with |shape|/n cycles of length n."""
    shape = partition(shape)
    core, _ = diagram_to_quotient(shape, n)
    if core:
        raise NonEmptyCore(f"{shape} has nonempty {n}-core {core}")
    return char_sym(shape, (n,) * (sum(shape) // n))


def char_table(n: int, m: int) -> dict:
    """{(lam, mu): chi_lam(mu)} over all n-tuples of total size m."""
    classes = multipartitions_of(m, n)
    return {(lam, mu): char_wreath(lam, mu) for lam in classes for mu in classes}


def row_orthogonality(n: int, m: int) -> bool:
    """sum_mu chi_a(mu) conj(chi_b(mu)) / z_mu = delta_ab."""
    classes = multipartitions_of(m, n)
    table = char_table(n, m)
    for a in classes:
        for b in classes:
            s = sum((table[a, mu] * conj(table[b, mu]) * Fraction(1, z_order(mu)) for mu in classes), 0)
            if simplify(s) != (1 if a == b else 0):
                return False
    return True


def column_orthogonality(n: int, m: int) -> bool:
    """sum_lam chi_lam(mu) conj(chi_lam(nu)) = z_mu delta_{mu nu}."""
    classes = multipartitions_of(m, n)
    table = char_table(n, m)
    for mu in classes:
        for nu in classes:
            s = sum((table[lam, mu] * conj(table[lam, nu]) for lam in classes), 0)
            if simplify(s) != (z_order(mu) if mu == nu else 0):
                return False
    return True


# -- brute force over the wreath group (small cases) ---------------------------

def wreath_elements(n: int, m: int):
    """Pairs (colors, perm): colors in Z_n^m, perm a tuple permutation of range(m)."""
    for perm in permutations(range(m)):
        for colors in product(range(n), repeat=m):
            yield colors, perm


def element_class(n: int, colors, perm) -> tuple:
    """Conjugacy class type: cycles of perm sorted into slots by their color sum."""
    m = len(perm)
    seen = [False] * m
    comps = [[] for _ in range(n)]
    for i in range(m):
        if seen[i]:
            continue
        j, length, total = i, 0, 0
        while not seen[j]:
            seen[j] = True
            total += colors[j]
            j = perm[j]
            length += 1
        comps[total % n].append(length)
    return tuple(partition(c) for c in comps)


def class_sizes_brute(n: int, m: int) -> Counter:
    return Counter(element_class(n, c, p) for c, p in wreath_elements(n, m))


def z_order_brute(mu) -> int:
    """Centralizer order |G| / |class| from an explicit element count."""
    mu = _normalize(mu)
    n, m = len(mu), mp_size(mu)
    sizes = class_sizes_brute(n, m)
    return (n ** m * factorial(m)) // sizes[mu]


def group_order(n: int, m: int) -> int:
    return n ** m * factorial(m)


def sum_dim_squares(n: int, m: int) -> int:
    return sum(dim_wreath(lam) ** 2 for lam in multipartitions_of(m, n))


def bialternant_char(shape, cycle_type) -> int:
    """Independent oracle: coefficient of x^{shape + delta} in
    a_delta * p_{cycle_type} over len(shape) variables (Frobenius formula)."""
    shape, cycle_type = partition(shape), partition(cycle_type)
    L = max(len(shape), 1)
    target = tuple((shape[i] if i < len(shape) else 0) + L - 1 - i for i in range(L))
    # a_delta = sum over permutations of sign * x^{sigma(delta)}
    poly = Counter()
    delta = tuple(range(L - 1, -1, -1))
    for perm in permutations(range(L)):
        sign = 1
        for i in range(L):
            for j in range(i + 1, L):
                if perm[i] > perm[j]:
                    sign = -sign
        poly[tuple(delta[perm[i]] for i in range(L))] += sign
    for k in cycle_type:
        nxt = Counter()
        for e, c in poly.items():
            for i in range(L):
                f = list(e)
                f[i] += k
                nxt[tuple(f)] += c
        poly = nxt
    return poly[target]
