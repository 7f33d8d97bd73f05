"""Substitution maps and the identities tying the two sides together: the
disk-distribution transform delta_mu(nu), the open crepant resolution
prefactor, the divisor factor, the DT crepant resolution check, the closing
monomial and character identities and the CRC parameter map."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .characters import SizeMismatch, char_sym, char_wreath, color_expansion
from .cyclotomic import root_power, simplify, xi
from .dt_vertex import Prefactor, VertexLegs, framed_vertex, framing_root_block, glue_PY, v_grading
from .partitions import aut_order, cells, mp_length, mp_size, multipartitions_of, partition, quotient_to_diagram, z_order, z_partition
from .rational import ExpSubstitution, RationalForm, rf_framed_vertex
from .series import Series, _inv, make_mono, mono_mul, mono_pow
from .weights import EquivWeights

KINDS = ("vertex-gwdt", "global-gwdt", "dtcrc", "crc-parameters")


@dataclass(frozen=True)
class SubstitutionMap:
    """A named change of variables.  The two GW/DT maps send q to +e^{iu}
    (vertex) or -e^{iu} (global); dtcrc sends v_j to q_j and the smooth q to
    q_0 ... q_{n-1}."""

    kind: str
    n: int
    weights: EquivWeights | None = None
    u_order: int = 3
    x_order: int = 1

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown substitution kind {self.kind!r}")

    def exp_substitution(self) -> ExpSubstitution:
        if self.kind not in ("vertex-gwdt", "global-gwdt"):
            raise ValueError(f"{self.kind} is not a GW/DT map")
        return ExpSubstitution(self.n, self.u_order, self.x_order, 1 if self.kind == "vertex-gwdt" else -1)

    def apply(self, f):
        if self.kind in ("vertex-gwdt", "global-gwdt"):
            if not isinstance(f, RationalForm):
                raise TypeError("the GW/DT maps act on rational forms")
            return self.exp_substitution().apply(f)
        if self.kind == "dtcrc":
            return dtcrc_substitute(f, self.n)
        return crc_parameter_map(f)


def dtcrc_substitute(s: Series, n: int) -> Series:
    """v_j -> q_j and q -> q_0 ... q_{n-1} on a series in q, v_1 .. v_{n-1}."""
    def image(m):
        out = {}
        for v, e in m:
            if v == "q":
                for c in range(n):
                    out[f"q{c}"] = out.get(f"q{c}", 0) + e
            elif v.startswith("v"):
                out[f"q{v[1:]}"] = out.get(f"q{v[1:]}", 0) + e
            else:
                out[v] = out.get(v, 0) + e
        return make_mono(out)
    terms = {}
    for m, c in s.terms.items():
        k = image(m)
        terms[k] = terms.get(k, 0) + c
    return Series(terms)


# -- the open crepant resolution transform -------------------------------------------

def delta_transform(mu, nu):
    """|Aut nu| / |Aut mu| times [p_nu] prod_{j, i} sum_k xi_n^{-jk} p^k_{mu^j_i}."""
    mu = tuple(partition(c) for c in mu)
    nu = tuple(partition(c) for c in nu)
    if len(mu) != len(nu):
        raise ValueError("moduli differ")
    c = color_expansion(mu).get(nu, 0)
    if not c:
        return 0
    return simplify(c * Fraction(aut_order(nu), aut_order(mu)))


def ocrc_prefactor(nu, weights: EquivWeights) -> Prefactor:
    """n^{-l(nu)} prod_k (-1)^{(n-k-1)|nu_k|} (xi_{2n}^{-1} xi_n^{-k})^{|nu_k| n w1/w3}."""
    nu = tuple(partition(c) for c in nu)
    n = len(nu)
    out = Fraction(1, n ** mp_length(nu))
    for k, comp in enumerate(nu):
        m = sum(comp)
        out = out * (-1) ** ((n - k - 1) * m)
        out = out * root_power(simplify((xi(2 * n, -1) * xi(n, -k)) ** m), n * weights.s)
    return Prefactor(simplify(out), ())


def divisor_factor(tau_plus, tau_minus, nu, beta, weights: EquivWeights) -> dict:
    """The exponent sum_i t_i (...) of the divisor equation, as {i: coefficient}."""
    n = weights.n
    beta = list(beta) + [0] * (n - 1 - len(beta))
    tp, tm = sum(partition(tau_plus)), sum(partition(tau_minus))
    sizes = [sum(partition(c)) for c in nu]
    r2, r1 = weights.w2 / weights.w3, weights.w1 / weights.w3
    out = {}
    for i in range(1, n):
        c = Fraction(beta[i - 1]) - Fraction(i, n) * tp - Fraction(n - i, n) * tm
        c -= sum((n - i) * r2 * sizes[j] for j in range(i))
        c -= sum(i * r1 * sizes[j] for j in range(i, n))
        out[i] = c
    return out


def divisor_v_monomial(tau_plus, tau_minus, nu, weights: EquivWeights) -> tuple:
    """The v-monomial multiplying the series once v_i = e^{t_i}."""
    n = weights.n
    tp, tm = sum(partition(tau_plus)), sum(partition(tau_minus))
    r1, r2 = weights.w1 / weights.w3, weights.w2 / weights.w3
    e = {f"v{i}": -Fraction(i, n) * tp - Fraction(n - i, n) * tm for i in range(1, n)}
    for j, comp in enumerate(nu):
        size = sum(partition(comp))
        for i in range(1, n):
            e[f"v{i}"] += (i * r1 if i <= j else (n - i) * r2) * size
    return make_mono(e)


# -- the DT crepant resolution ------------------------------------------------------------

def dtcrc_correction(legs: VertexLegs, weights: EquivWeights) -> Prefactor:
    """The factor relating the chain ratio to the framed orbifold vertex.

    Its root of unity block is the inverse of the one in the framing, taken
    on the same branch, so the two cancel and only the signs survive."""
    n, s = legs.n, weights.s
    coeff = _inv(framing_root_block(legs.lam, weights))
    ex = {f"q{c}": Fraction(0) for c in range(n)}
    for k, comp in enumerate(legs.lam):
        for i, j in cells(comp):
            coeff = coeff * (-1) ** (n - k - 1)
            for c in range(n):
                ex[f"q{c}"] += (i - j) * n * s
            for l in range(k + 1, n):
                ex[f"q{l}"] += l - n
    for c in range(1, n):
        ex[f"q{c}"] += Fraction(c, n) * sum(legs.rho_plus) + Fraction(n - c, n) * sum(legs.rho_minus)
    for i, j in cells(legs.diagram().shape):
        ex[f"q{(j - i) % n}"] -= (i - j) * s
    return Prefactor(simplify(coeff), make_mono(ex))


def _by_v_degree(s: Series) -> dict:
    idx = [g.name for g in s.gradings].index("v")
    qi = [g.name for g in s.gradings].index("q")
    out = {}
    for m in s.terms:
        d = s.degrees(m)
        k = d[idx]
        out[k] = min(out.get(k, d[qi]), d[qi])
    return dict(sorted(out.items()))


@dataclass
class DTCRCReport:
    legs: VertexLegs
    window: tuple
    dv: int
    lhs: Series
    rhs: Series
    mismatches: list = field(default_factory=list)
    layer_valuations: dict = field(default_factory=dict)
    expansion: str = "series"

    @property
    def passed(self) -> bool:
        return not self.mismatches

    @property
    def layers_descend(self) -> bool:
        """True when deeper chain layers reach lower total degree, so the
        chain sum has no lower bound in q and cannot be a Laurent series."""
        v = list(self.layer_valuations.values())
        return len(v) > 1 and v[-1] < min(v[:-1])

    def to_json(self) -> dict:
        from .io import coeff_to_json
        return {"legs": self.legs.to_json(), "window": [str(x) for x in self.window], "dv": self.dv,
                "expansion": self.expansion,
                "passed": self.passed, "mismatch_count": len(self.mismatches),
                "first_mismatch": None if self.passed else {
                    "monomial": {v: str(e) for v, e in self.mismatches[0][0]},
                    "lhs": coeff_to_json(self.mismatches[0][1]), "rhs": coeff_to_json(self.mismatches[0][2])},
                "layer_valuations": {str(k): str(v) for k, v in self.layer_valuations.items()},
                "layers_descend": self.layers_descend}


def dtcrc_sides(legs: VertexLegs, weights: EquivWeights, top, dv: int):
    """(chain ratio, numerator, corrected framed vertex), the first two exact
    through total degree ``top`` and v-degree ``dv``."""
    num = glue_PY(legs.rho_plus, legs.rho_minus, legs.lam, weights, top, dv)
    den = glue_PY((), (), [()] * legs.n, weights, max(top, top - num.valuation("q")), dv)
    lhs = (num / den).truncate("q", top)
    pre = dtcrc_correction(legs, weights)
    fv = framed_vertex(legs, weights, top - pre.degree())
    return lhs, num, pre.apply(fv.series).truncate("q", top)


def rf_dtcrc_rhs(legs: VertexLegs, weights: EquivWeights) -> RationalForm:
    """The corrected framed orbifold vertex as an exact rational form."""
    pre = dtcrc_correction(legs, weights)
    return rf_framed_vertex(legs, weights).shift(pre.mono, pre.coeff)


def _tdeg(m):
    return sum(e for v, e in m if v.startswith("q"))


def chain_expansion(f: RationalForm, n: int, top, dv: int) -> dict:
    """Expand f where the chain sum lives: 1/(1 - m) is a geometric series in
    m when m has positive v-degree (or v-degree 0 and positive total degree),
    and in 1/m otherwise.  Exact on monomials of total degree <= top and
    v-degree <= dv; returns {monomial: coefficient}."""
    vg = v_grading(n, None, True)
    num = dict(f.num.terms)
    den = []
    for m, k in f.den.items():
        v, t = vg.degree(m), _tdeg(m)
        if v < 0 or (v == 0 and t < 0):
            num = {mono_mul(x, mono_pow(m, -k)): c * (-1) ** k for x, c in num.items()}
            m = mono_pow(m, -1)
        elif v == 0 and t == 0:
            raise ZeroDivisionError(f"1 - {m} has no expansion")
        den += [m] * k
    if not num:
        return {}
    vmin = min(vg.degree(x) for x in num)
    tmin = min(_tdeg(x) for x in num)
    # a factor of positive v-degree contributes at most (dv - vmin) / v powers;
    # those with negative total degree can pull far terms back into the window
    powers, slack = [], []
    for m in den:
        v, t = vg.degree(m), _tdeg(m)
        J = int((dv - vmin) // v) if v > 0 else None
        powers.append(J)
        slack.append(min(t, 0) * J if v > 0 else 0)
    low = tmin + sum(slack)
    powers = [J if J is not None else int((top - low) // _tdeg(m)) for m, J in zip(den, powers)]
    out = num
    for i, (m, J) in enumerate(zip(den, powers)):
        bound = top - sum(slack[i + 1:])
        nxt = {}
        for x, c in out.items():
            y = x
            for _ in range(J + 1):
                if vg.degree(y) > dv:
                    break
                if _tdeg(y) <= bound:
                    nxt[y] = nxt.get(y, 0) + c
                y = mono_mul(y, m)
        out = {x: c for x, c in nxt.items() if simplify(c) != 0}
    return {x: simplify(c) for x, c in out.items() if _tdeg(x) <= top}


def dtcrc_check(rho_plus, rho_minus, lam, weights: EquivWeights, window=(-4, 4), dv: int = 4,
                expansion: str = "series") -> DTCRCReport:
    """Compare the chain ratio with the corrected framed orbifold vertex on
    every monomial of total degree in ``window`` and v-degree at most dv.

    expansion="series" takes the orbifold side as its power series in the
    q_c; expansion="chain" re-expands its rational form in the domain of the
    chain sum instead (see chain_expansion)."""
    legs = VertexLegs(rho_plus, rho_minus, lam)
    lo, hi = window
    lhs, num, rhs = dtcrc_sides(legs, weights, hi, dv)
    if expansion == "chain":
        rhs_terms = chain_expansion(rf_dtcrc_rhs(legs, weights), legs.n, hi, dv)
    elif expansion == "series":
        rhs_terms = rhs.terms
    else:
        raise ValueError(f"unknown expansion {expansion!r}")
    bad = []
    keys = set(lhs.terms) | set(rhs_terms)
    vg = v_grading(legs.n, None, True)
    for m in sorted(keys):
        d = _tdeg(m)
        if d < lo or d > hi or vg.degree(m) > dv:
            continue
        a, b = lhs.terms.get(m, 0), rhs_terms.get(m, 0)
        if simplify(a - b) != 0:
            bad.append((m, a, b))
    return DTCRCReport(legs, (lo, hi), dv, lhs, rhs, bad, _by_v_degree(num), expansion)


# -- the closing identities -------------------------------------------------------------

def lemma1_monomial(lam, literal: bool = False) -> tuple:
    """prod_k (prod_{lam^k} q^{n(j-i)} prod_{i<=k} v_i^i prod_{i>k} v_i^{i-n})
    times prod over the diagram of q_{j-i}^{i-j}, with v_i = q_i and
    q = q_0 ... q_{n-1}.  ``literal`` takes both content exponents with the
    opposite sign, q^{n(i-j)} and q_{j-i}^{j-i}."""
    lam = tuple(partition(c) for c in lam)
    n = len(lam)
    sign = 1 if literal else -1
    e = [0] * n
    for k, comp in enumerate(lam):
        for i, j in cells(comp):
            for c in range(n):
                e[c] += sign * n * (i - j)
            for a in range(1, n):
                e[a] += a if a <= k else a - n
    for i, j in cells(quotient_to_diagram(lam)):
        e[(j - i) % n] += sign * (j - i)
    return make_mono({f"q{c}": x for c, x in enumerate(e)})


def lemma2_lhs(lam, mu, literal: bool = False):
    """sum_nu delta_mu(nu) n^{-l(nu)} prod_j chi_{lam^j}(nu^j) / z_{nu^j};
    ``literal`` drops the n^{-l(nu)}."""
    lam = tuple(partition(c) for c in lam)
    mu = tuple(partition(c) for c in mu)
    if mp_size(lam) != mp_size(mu):
        raise SizeMismatch(f"|{lam}| != |{mu}|")
    n = len(lam)
    total = 0
    for nu in multipartitions_of(mp_size(mu), n):
        if any(sum(nu[c]) != sum(lam[c]) for c in range(n)):
            continue
        d = delta_transform(mu, nu)
        if not d:
            continue
        term = d
        for c in range(n):
            term = term * Fraction(char_sym(lam[c], nu[c]), z_partition(nu[c]))
        if not literal:
            term = term * Fraction(1, n ** mp_length(nu))
        total = total + term
    return simplify(total)


def lemma2_check(lam, mu, literal: bool = False) -> bool:
    rhs = simplify(char_wreath(lam, mu) * Fraction(1, z_order(tuple(partition(c) for c in mu))))
    return simplify(lemma2_lhs(lam, mu, literal) - rhs) == 0


# -- the CRC parameter map ----------------------------------------------------------------

PI_I = "pi_i"  # the symbolic unit pi sqrt(-1)


def _form_add(a: dict, b: dict, scale=1) -> dict:
    out = dict(a)
    for k, v in b.items():
        out[k] = simplify(out.get(k, 0) + scale * v)
        if out[k] == 0:
            del out[k]
    return out


def crc_parameter_map(geometry, inputs=None) -> dict:
    """Affine-linear images of T_{B_i}, T_{C_i}, T_{D_{i,j}} over lines i = 1..
    with data (n_i, m_i).  Forms are dicts {symbol: coefficient}; ``inputs``
    may bind t_A{i}, t_B{i}, x{i}_{k} to forms, otherwise they stay symbolic."""
    if isinstance(geometry, SubstitutionMap):
        raise TypeError("pass the list of (n_i, m_i)")
    inputs = inputs or {}

    def sym(name):
        v = inputs.get(name)
        return {name: 1} if v is None else (dict(v) if isinstance(v, dict) else ({"1": v} if v else {}))

    out = {}
    for i, (n, m) in enumerate(geometry, start=1):
        def D(j):
            f = {PI_I: Fraction(2, n)}
            for k in range(1, n):
                c = simplify(xi(n, -j * k) * (xi(2 * n, k) - xi(2 * n, -k)) * Fraction(1, n))
                f = _form_add(f, sym(f"x{i}_{k}"), c)
            return f
        out[f"T_B{i}"] = sym(f"t_B{i}")
        tc = sym(f"t_A{i}")
        for l in range(1, n):
            tc = _form_add(tc, D(l), -(m + 2) * (n - l))
        out[f"T_C{i}"] = tc
        for j in range(1, n):
            out[f"T_D{i}_{j}"] = D(j)
    return out
