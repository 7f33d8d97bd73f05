"""Complete homogeneous and skew Schur functions at the q-frak
specializations, and loop Schur functions of colored diagrams."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .partitions import ColoredDiagram, cells, conjugate, contains, partition
from .series import Series, make_mono, mono_mul, q_grading


class CutoffTooSmall(ValueError):
    pass


def qfrak(t: int, n: int) -> tuple:
    """The monomial q-frak_t: 1 at t = 0, q_1 ... q_t for t > 0 and
    (q_0 q_{-1} ... q_{t+1})^(-1) for t < 0, indices mod n."""
    exps = [0] * n
    if t > 0:
        for a in range(1, t + 1):
            exps[a % n] += 1
    elif t < 0:
        for a in range(t + 1, 1):
            exps[a % n] -= 1
    return make_mono({f"q{c}": e for c, e in enumerate(exps)})


def degree(m: tuple):
    return sum(e for _, e in m)


@dataclass(frozen=True)
class SpecializationSet:
    """The alphabet q-frak_{i - shape_i}, i = 0 .. cutoff - 1."""

    n: int
    shape: tuple = ()
    cutoff: int = 0

    def __post_init__(self):
        object.__setattr__(self, "shape", partition(self.shape))

    def variables(self) -> list:
        rows = self.shape
        return [qfrak(i - (rows[i] if i < len(rows) else 0), self.n) for i in range(self.cutoff)]

    def min_degree(self) -> int:
        rows = self.shape
        return min([0] + [i - r for i, r in enumerate(rows)])

    def required_cutoff(self, k: int, top: int) -> int:
        """Smallest cutoff making h_k exact through degree ``top``."""
        return max(len(self.shape), top - (k - 1) * self.min_degree() + 1 if k else 0)

    def with_cutoff(self, cutoff: int) -> "SpecializationSet":
        return SpecializationSet(self.n, self.shape, cutoff)


def _trunc_mul_var(H: list, x: tuple, dx, top):
    """Fold one variable into the list H[j] of homogeneous pieces."""
    kmax = len(H) - 1
    out = [dict(h) for h in H]
    for j in range(1, kmax + 1):
        # out[j] = sum_a x^a H[j - a]; recurrence out[j] = H[j] + x * out[j - 1]
        acc = dict(H[j])
        for m, c in out[j - 1].items():
            mm = mono_mul(m, x)
            if top is not None and degree(mm) > top:
                continue
            acc[mm] = acc.get(mm, 0) + c
        out[j] = {m: c for m, c in acc.items() if c}
    return out


def h_at_spec(k: int, S: SpecializationSet, top) -> Series:
    """h_k of the alphabet S, exact through total q-degree ``top``."""
    g = q_grading(S.n, top)
    if k < 0:
        return Series({}, [g.with_prec(None)])
    if k == 0:
        return Series.const(1, [g])
    need = S.required_cutoff(k, top)
    if S.cutoff < need:
        raise CutoffTooSmall(f"cutoff {S.cutoff} < {need} for h_{k} through degree {top}")
    xs = sorted(S.variables(), key=degree)
    H = [{(): 1}] + [{} for _ in range(k)]
    for x in xs:
        dx = degree(x)
        # nonpositive variables first and untruncated; positive ones only raise degrees
        H = _trunc_mul_var(H, x, dx, None if dx <= 0 else top)
    return Series(H[k], [g])


def h_values(S: SpecializationSet, kmax: int, top) -> list:
    """[h_0, ..., h_kmax], each exact through ``top``, in one pass."""
    g = q_grading(S.n, top)
    need = S.required_cutoff(kmax, top) if kmax else 0
    if S.cutoff < need:
        raise CutoffTooSmall(f"cutoff {S.cutoff} < {need} for h_{kmax} through degree {top}")
    xs = sorted(S.variables(), key=degree)
    H = [{(): 1}] + [{} for _ in range(kmax)]
    for x in xs:
        dx = degree(x)
        H = _trunc_mul_var(H, x, dx, None if dx <= 0 else top)
    return [Series(h, [g]) for h in H]


def jacobi_trudi_indices(rho, omega):
    rho, omega = partition(rho), partition(omega)
    L = len(rho)
    om = list(omega) + [0] * (L - len(omega))
    return [[rho[i] - om[j] - i + j for j in range(L)] for i in range(L)]


def _perm_sign(p) -> int:
    sign, seen = 1, set()
    for i in range(len(p)):
        if i in seen:
            continue
        j, length = i, 0
        while j not in seen:
            seen.add(j)
            j = p[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def determinant(matrix, one):
    """Leibniz expansion; entries support + and *."""
    L = len(matrix)
    total = None
    for p in permutations(range(L)):
        term = one
        for i in range(L):
            term = term * matrix[i][p[i]]
        term = term * _perm_sign(p)
        total = term if total is None else total + term
    return one if total is None else total


def skew_schur_at_spec(rho, omega, S: SpecializationSet, top) -> Series:
    """s_{rho/omega} of the alphabet S through degree ``top`` (Jacobi-Trudi)."""
    rho, omega = partition(rho), partition(omega)
    g = q_grading(S.n, top)
    if not contains(rho, omega):
        return Series({}, [g.with_prec(None)])
    if rho == omega:
        return Series.const(1, [g])
    idx = jacobi_trudi_indices(rho, omega)
    kmax = max(max(r) for r in idx)
    slack = (len(rho) and (sum(rho) - sum(omega))) * (-S.min_degree())
    inner = top + slack
    S = S.with_cutoff(max(S.cutoff, S.required_cutoff(kmax, inner)))
    hs = h_values(S, kmax, inner)
    zero = Series({}, [g.with_prec(None)])
    mat = [[hs[k] if k >= 0 else zero for k in row] for row in idx]
    return determinant(mat, Series.const(1)).truncate("q", top).regrade([g])


def spec_for(n: int, shape, top: int, kmax: int) -> SpecializationSet:
    S = SpecializationSet(n, shape)
    return S.with_cutoff(S.required_cutoff(max(kmax, 1), top + kmax * (-S.min_degree())))


# -- semistandard tableaux ---------------------------------------------------------

def ssyt(shape, max_entry: int, min_entry: int = 0):
    """All column-strict fillings with entries in [min_entry, max_entry]."""
    shape = partition(shape)
    cs = list(cells(shape))
    T = {}

    def rec(k):
        if k == len(cs):
            yield dict(T)
            return
        i, j = cs[k]
        lo = min_entry
        if j > 0:
            lo = max(lo, T[(i, j - 1)])
        if i > 0:
            lo = max(lo, T[(i - 1, j)] + 1)
        for v in range(lo, max_entry + 1):
            T[(i, j)] = v
            yield from rec(k + 1)
        T.pop((i, j), None)

    yield from rec(0)


def skew_ssyt(rho, omega, alphabet_size: int):
    """Column-strict fillings of rho/omega with entries 0..alphabet_size-1."""
    rho, omega = partition(rho), partition(omega)
    inner = set(cells(omega))
    cs = [c for c in cells(rho) if c not in inner]
    T = {}

    def rec(k):
        if k == len(cs):
            yield dict(T)
            return
        i, j = cs[k]
        lo = 0
        if j > 0 and (i, j - 1) in T:
            lo = max(lo, T[(i, j - 1)])
        if i > 0 and (i - 1, j) in T:
            lo = max(lo, T[(i - 1, j)] + 1)
        for v in range(lo, alphabet_size):
            T[(i, j)] = v
            yield from rec(k + 1)
        T.pop((i, j), None)

    yield from rec(0)


def skew_schur_tableaux(rho, omega, xs: list) -> dict:
    """Exact polynomial s_{rho/omega}(xs) by tableau enumeration, as
    {monomial: coeff} over monomials in the given variable monomials."""
    if not contains(partition(rho), partition(omega)):
        return {}
    out = {}
    for T in skew_ssyt(rho, omega, len(xs)):
        m = ()
        for v in T.values():
            m = mono_mul(m, xs[v])
        out[m] = out.get(m, 0) + 1
    return {m: c for m, c in out.items() if c}


def skew_schur_jt_finite(rho, omega, xs: list) -> dict:
    """Exact polynomial s_{rho/omega}(xs) by Jacobi-Trudi over a finite alphabet."""
    rho, omega = partition(rho), partition(omega)
    if not contains(rho, omega):
        return {}
    if rho == omega:
        return {(): 1}
    idx = jacobi_trudi_indices(rho, omega)
    kmax = max(max(r) for r in idx)
    H = [{(): 1}] + [{} for _ in range(kmax)]
    for x in xs:
        H = _trunc_mul_var(H, x, None, None)
    hs = [Series(h) for h in H]
    mat = [[hs[k] if k >= 0 else Series({}) for k in row] for row in idx]
    return dict(determinant(mat, Series.const(1)).terms)


# -- loop Schur functions -----------------------------------------------------------

# Tableau weight conventions for a cell of color c holding entry t.
#   "power":   q_c ** t
#   "shift+":  q_{c+1} q_{c+2} ... q_{c+t}
#   "shift-":  q_c q_{c-1} ... q_{c-t+1}
# All three reduce to q**t when n = 1.  The box-counting oracle selects
# "power" (see tests/test_box_oracle.py and scripts/pin_conventions.py).
LOOP_SCHUR_CONVENTIONS = ("power", "shift+", "shift-")
LOOP_SCHUR_CONVENTION = "power"


def _cell_weight(c: int, t: int, n: int, convention: str) -> dict:
    e = [0] * n
    if convention == "power":
        e[c % n] += t
    elif convention == "shift+":
        for a in range(1, t + 1):
            e[(c + a) % n] += 1
    elif convention == "shift-":
        for a in range(t):
            e[(c - a) % n] += 1
    else:
        raise ValueError(f"unknown loop Schur convention {convention!r}")
    return e


def loop_schur(diagram: ColoredDiagram, top, convention: str = LOOP_SCHUR_CONVENTION) -> Series:
    """Colored tableau sum over SSYT of the diagram (entries >= 0),
    exact through total q-degree ``top``."""
    diagram = diagram.require_empty_core()
    n, shape = diagram.n, diagram.shape
    g = q_grading(n, top)
    if not shape:
        return Series.const(1, [g])
    # every cell weight has degree t, and column strictness forces entries >= row
    base = sum(i for i, _ in cells(shape))
    if top < base:
        return Series({}, [g])
    max_entry = top - base + len(shape)
    terms = {}
    for T in ssyt(shape, max_entry):
        if sum(T.values()) > top:
            continue
        e = [0] * n
        for (i, j), t in T.items():
            for c, x in enumerate(_cell_weight(j - i, t, n, convention)):
                e[c] += x
        m = make_mono({f"q{c}": x for c, x in enumerate(e)})
        terms[m] = terms.get(m, 0) + 1
    return Series(terms, [g])


def hook_color_monomial(shape, cell, n: int) -> tuple:
    """Product of q_{color} over the cells of the hook at ``cell``."""
    shape = partition(shape)
    pc = conjugate(shape)
    i, j = cell
    e = [0] * n
    for jj in range(j, shape[i]):
        e[(jj - i) % n] += 1
    for ii in range(i + 1, pc[j]):
        e[(j - ii) % n] += 1
    return make_mono({f"q{c}": x for c, x in enumerate(e)})


def loop_schur_hook_data(diagram: ColoredDiagram):
    """(monomial prefactor, list of hook monomials) with
    loop_schur = prefactor / prod (1 - hook monomial) for the "power" convention."""
    shape = diagram.shape
    n = diagram.n
    e = [0] * n
    for i, j in cells(shape):
        e[(j - i) % n] += i
    pref = make_mono({f"q{c}": x for c, x in enumerate(e)})
    hooks = [hook_color_monomial(shape, c, n) for c in cells(shape)]
    return pref, hooks


def loop_schur_hook(diagram: ColoredDiagram, top) -> Series:
    """Hook-product form of the loop Schur function, as a cross-check."""
    diagram = diagram.require_empty_core()
    g = q_grading(diagram.n, top)
    pref, hooks = loop_schur_hook_data(diagram)
    out = Series.const(1, [g]).shift(pref)
    for h in hooks:
        out = out * Series.geometric(h, [g.with_prec(top)])
    return out.truncate("q", top)
