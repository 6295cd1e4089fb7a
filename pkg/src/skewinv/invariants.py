"""Invariant rings: fixed spaces, Molien series, generators, verification.

Fixed spaces are computed exactly: diagonal elements filter the monomial
basis by character, and a single antidiagonal representative (when present)
pins down the +-pairings between u^i v^j and u^j v^i.  Generation is
verified degree by degree: the span of products of generators must have the
Molien dimension in every degree up to the bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import InternalInconsistencyError, ParameterError
from .group_actions import (
    CyclicDiag,
    Gnk,
    GroupSpec,
    TruncatedSeries,
    enumerate_group,
    is_small_brute,
    trace_series,
)
from .hj_series import nc_series, typeA_data, typeD_data
from .linalg import SpanBuilder
from .scalars import Cyclo, euler_phi, _power_table
from .skew_algebra import (
    AlgebraElt,
    AlgebraSpec,
    Monomial,
    apply_aut,
    mul,
    power,
    to_text,
    validate_automorphism,
)


def _elements_for(spec: AlgebraSpec, G: GroupSpec):
    elems = enumerate_group(G)
    if spec != G.ambient:
        for g in elems:
            validate_automorphism(spec, g)
    return elems


def fixed_space(spec: AlgebraSpec, G: GroupSpec, d: int) -> list[AlgebraElt]:
    """Canonical basis of the degree-d fixed subspace (ascending (i,j)-lex pivots)."""
    if d < 0:
        raise ParameterError("degree must be non-negative")
    elems = _elements_for(spec, G)
    diags = [g for g in elems if g.shape == "diagonal"]
    others = [g for g in elems if g.shape != "diagonal"]
    if len(diags) + len(others) != len(elems) or any(g.shape == "general" for g in elems):
        raise ParameterError("unsupported group shape for fixed_space")

    surviving = []
    for i in range(d + 1):
        j = d - i
        ok = True
        for g in diags:
            if g.mono is not None:
                m, e1, e2 = g.mono
                if (e1 * i + e2 * j) % m:
                    ok = False
                    break
            else:
                if not ((g.a ** i) * (g.d ** j)).is_one():
                    ok = False
                    break
        if ok:
            surviving.append((i, j))
    if not others:
        return [AlgebraElt.monomial(1, i, j) for (i, j) in surviving]

    surv = set(surviving)
    q = spec.q
    basis: list[AlgebraElt] = []
    for (i, j) in surviving:
        if (j, i) not in surv:
            continue
        if i > j:
            continue  # handled at the (min, max) representative
        # scalars s with h(u^i v^j) = s * u^j v^i, one per non-diagonal element
        ratios = []
        ok = True
        for h in others:
            s = (h.c ** i) * (h.b ** j) * (q ** (i * j))
            s_back = (h.c ** j) * (h.b ** i) * (q ** (i * j))
            if i == j:
                if not s.is_one():
                    ok = False
                    break
            else:
                if not (s * s_back).is_one():
                    ok = False
                    break
                ratios.append(s)
        if not ok:
            continue
        if i == j:
            basis.append(AlgebraElt.monomial(1, i, i))
            continue
        first = ratios[0]
        if any(not (r - first).is_zero() for r in ratios[1:]):
            continue
        basis.append(AlgebraElt({Monomial(i, j): Cyclo.one(), Monomial(j, i): first}))
    basis.sort(key=lambda e: min(e.terms))
    return basis


def molien(spec: AlgebraSpec, G: GroupSpec, N: int) -> TruncatedSeries:
    """hilb A^G truncated at N: the group average of the trace series.

    Coefficients must come out rational (the imaginary parts cancel); a
    non-rational coefficient raises InternalInconsistencyError.
    """
    elems = _elements_for(spec, G)
    order = len(elems)
    monos = [g.mono for g in elems]
    if all(m is not None for m in monos):
        m = max(mono[0] for mono in monos)
        if all(mono[0] == m or m % mono[0] == 0 for mono in monos):
            return _molien_by_counting(spec, elems, m, order, N)
    total = None
    for g in elems:
        s = trace_series(spec, g, N)
        total = s if total is None else total + s
    series = TruncatedSeries([c * Fraction(1, order) for c in total.coeffs])
    series.rational_coeffs()
    return series


def _molien_by_counting(spec, elems, m, order, N) -> TruncatedSeries:
    phi = euler_phi(m)
    table = _power_table(m)
    minus_one = m // 2 if m % 2 == 0 else None
    diag = []
    anti = []
    for g in elems:
        mm, e1, e2 = g.mono
        scale = m // mm
        if g.shape == "diagonal":
            diag.append((e1 * scale % m, e2 * scale % m))
        else:
            anti.append((e1 * scale % m, e2 * scale % m))
    q_is_minus1 = spec.is_quantum and spec.q == -1
    if anti and q_is_minus1 and minus_one is None:
        raise InternalInconsistencyError("antidiagonal elements need an even root order")
    coeffs = []
    for d in range(N + 1):
        counts = [0] * m
        for e1, e2 in diag:
            e = (e2 * d) % m
            step = (e1 - e2) % m
            for _ in range(d + 1):
                counts[e] += 1
                e = (e + step) % m
        if d % 2 == 0:
            i = d // 2
            for e1, e2 in anti:
                e = ((e1 + e2) * i) % m
                if q_is_minus1 and i % 2:
                    e = (e + minus_one) % m
                counts[e] += 1
        out = [0] * phi
        for e, c in enumerate(counts):
            if c:
                row = table[e]
                for t in range(phi):
                    if row[t]:
                        out[t] += c * row[t]
        if any(out[1:]):
            raise InternalInconsistencyError(
                f"Molien coefficient at degree {d} is not rational"
            )
        coeffs.append(Cyclo.from_rational(Fraction(out[0], order)))
    return TruncatedSeries(coeffs)


def reynolds(spec: AlgebraSpec, G: GroupSpec, a: AlgebraElt, normalized: bool = True) -> AlgebraElt:
    """Group sum of the orbit of a (divided by |G| when normalized)."""
    elems = _elements_for(spec, G)
    total = AlgebraElt.zero()
    for g in elems:
        total = total + apply_aut(spec, g, a, checked=False)
    if normalized:
        return total.scale(Fraction(1, len(elems)))
    return total


def is_invariant(spec: AlgebraSpec, G: GroupSpec, a: AlgebraElt) -> bool:
    return all(apply_aut(spec, g, a, checked=False) == a for g in G.generators())


# ---------------------------------------------------------------------------
# generator sets
# ---------------------------------------------------------------------------


@dataclass
class GeneratorSet:
    generators: list[AlgebraElt]
    degrees: list[int]
    provenance: str  # typeA_formula | jordan_formula | nc_formula | brute_force

    def to_json(self) -> dict:
        return {
            "provenance": self.provenance,
            "degrees": self.degrees,
            "generators": [to_text(g) for g in self.generators],
        }


def _uv_power(spec: AlgebraSpec, r: int) -> AlgebraElt:
    return power(spec, AlgebraElt.monomial(1, 1, 1), r)


def _nc_generators(spec: AlgebraSpec, n: int, k: int) -> list[AlgebraElt]:
    data = nc_series(n, k)
    gens = []
    for exps in data.generator_exponents():
        if len(exps) == 1:
            gens.append(_uv_power(spec, exps[0]))
        else:
            e, sign_exp, r = exps
            head = AlgebraElt({Monomial(e, 0): 1, Monomial(0, e): (-1) ** sign_exp})
            gens.append(mul(spec, head, _uv_power(spec, r)))
    return gens


def typeD_generators(spec: AlgebraSpec, m: int, q: int) -> list[AlgebraElt]:
    """(u^(2qs) + (-1)^t v^(2qs)) (uv)^r generators of the D_{m,q} invariants."""
    data = typeD_data(m, q)
    gens = []
    for exps in data.generator_exponents():
        if len(exps) == 1:
            gens.append(_uv_power(spec, exps[0]))
        else:
            e, t, r = exps
            head = AlgebraElt({Monomial(e, 0): 1, Monomial(0, e): (-1) ** t})
            gens.append(mul(spec, head, _uv_power(spec, r)))
    return gens


def generator_set(spec: AlgebraSpec, G: GroupSpec) -> GeneratorSet:
    """Explicit generators of A^G for each classification case."""
    if spec.is_commutative:
        raise ParameterError("generator_set targets the noncommutative planes")
    if spec != G.ambient:
        raise ParameterError("group does not act on the requested algebra")
    if not is_small_brute(G):
        raise ParameterError(f"{G.describe()} is not small; no generator formula applies")
    v = G.variant
    if spec.kind == "jordan":
        n = v.n
        gens = [
            AlgebraElt.monomial(Fraction((-1) ** i, _fact(i)), n - i, i) for i in range(n + 1)
        ]
        gs = GeneratorSet(gens, [g.degree() for g in gens], "jordan_formula")
    elif isinstance(v, CyclicDiag):
        data = typeA_data(v.n, v.a)
        gens = [AlgebraElt.monomial(1, i, j) for i, j in data.generator_exponents()]
        gs = GeneratorSet(gens, [g.degree() for g in gens], "typeA_formula")
    elif isinstance(v, Gnk):
        n, k = v.n, v.k
        if n % 2 == 1 and k % 2 == 1 and (n, k) != (1, 1):
            gens = _nc_generators(spec, n, k)
            gs = GeneratorSet(gens, [g.degree() for g in gens], "nc_formula")
        else:
            gens = _brute_force_generators(spec, G)
            gs = GeneratorSet(gens, [g.degree() for g in gens], "brute_force")
    else:
        raise ParameterError(f"no generator formula for {G.describe()}")
    for g in gs.generators:
        if not is_invariant(spec, G, g):
            raise InternalInconsistencyError(
                f"constructed generator is not invariant: {to_text(g)}"
            )
    return gs


def _fact(i: int) -> int:
    out = 1
    for x in range(2, i + 1):
        out *= x
    return out


def _degree_cols(elt: AlgebraElt) -> dict[int, Cyclo]:
    """Sparse coordinates of a homogeneous element in its degree's monomial basis."""
    return {mon.i: c for mon, c in elt.terms.items()}


def _cols_to_elt(cols: dict[int, Cyclo], d: int) -> AlgebraElt:
    return AlgebraElt({Monomial(i, d - i): c for i, c in cols.items()})


def subalgebra_spans(
    spec: AlgebraSpec, gens: list[AlgebraElt], N: int
) -> list[SpanBuilder]:
    """Per-degree spans of the unital subalgebra generated by gens, degrees 0..N."""
    for g in gens:
        if g.is_zero() or not g.is_homogeneous():
            raise ParameterError("generators must be nonzero and homogeneous")
    spans = [SpanBuilder() for _ in range(N + 1)]
    spans[0].add({0: Cyclo.one()})
    by_degree: dict[int, list[AlgebraElt]] = {}
    for g in gens:
        by_degree.setdefault(g.degree(), []).append(g)
    for d in range(1, N + 1):
        sb = spans[d]
        for e, gs in by_degree.items():
            if e > d:
                continue
            lower = spans[d - e]
            for g in gs:
                for row in lower.basis():
                    prod = mul(spec, _cols_to_elt(row, d - e), g)
                    if not prod.is_zero():
                        sb.add(_degree_cols(prod))
    return spans


def verify_generation(
    spec: AlgebraSpec, G: GroupSpec, gens: GeneratorSet, N: int
) -> dict:
    """Compare the span of products of generators with the Molien dimensions."""
    for g in gens.generators:
        if not is_invariant(spec, G, g):
            raise ParameterError(f"generator is not invariant: {to_text(g)}")
    target = molien(spec, G, N).integer_coeffs()
    spans = subalgebra_spans(spec, gens.generators, N)
    dims = []
    first_failure = None
    for d in range(N + 1):
        got = spans[d].rank
        dims.append({"degree": d, "span_dim": got, "invariant_dim": target[d]})
        if got > target[d]:
            raise InternalInconsistencyError(
                f"span dimension exceeds the invariant dimension at degree {d}"
            )
        if got < target[d] and first_failure is None:
            first_failure = d
    return {
        "ok": first_failure is None,
        "first_failure": first_failure,
        "N": N,
        "dims": dims,
    }


def _brute_force_generators(spec: AlgebraSpec, G: GroupSpec) -> list[AlgebraElt]:
    """Deterministic degree-walk extraction: add fixed-space elements outside the
    current subalgebra span, in increasing degree and (i,j)-lex order."""
    order = len(enumerate_group(G))
    cap = max(2 * order, 8)
    hard_cap = 4 * order + 16
    while True:
        gens: list[AlgebraElt] = []
        spans = [SpanBuilder() for _ in range(cap + 1)]
        spans[0].add({0: Cyclo.one()})
        for d in range(1, cap + 1):
            sb = spans[d]
            for g in gens:
                e = g.degree()
                if e > d:
                    continue
                for row in spans[d - e].basis():
                    prod = mul(spec, _cols_to_elt(row, d - e), g)
                    if not prod.is_zero():
                        sb.add(_degree_cols(prod))
            for vec in fixed_space(spec, G, d):
                if sb.add(_degree_cols(vec)):
                    gens.append(vec)
        # safety window: spans must already match Molien through the cap
        target = molien(spec, G, cap).integer_coeffs()
        if all(spans[d].rank == target[d] for d in range(cap + 1)):
            return gens
        if cap >= hard_cap:
            raise InternalInconsistencyError(
                f"generator extraction did not stabilize by degree {cap} for {G.describe()}"
            )
        cap = min(2 * cap, hard_cap)


# ---------------------------------------------------------------------------
# the G_{n,k} fixed-space basis
# ---------------------------------------------------------------------------


def gnk_basis(n: int, k: int, d: int) -> list[AlgebraElt]:
    """Basis elements of (A^{G_{n,k}})_d for n, k odd coprime:
    (u^(ns) + (-1)^(r+ns) v^(ns)) (uv)^r over solutions of 2r + ns = kt,
    plus (uv)^(2ki) when d = 4ki."""
    if n % 2 == 0 or k % 2 == 0 or gcd(n, k) != 1:
        raise ParameterError("gnk_basis needs n, k odd and coprime")
    if d < 0:
        raise ParameterError("degree must be non-negative")
    spec = AlgebraSpec.quantum(Cyclo.from_rational(-1))
    if d == 0:
        return [AlgebraElt.one()]
    out: list[AlgebraElt] = []
    if d > 0 and d % (4 * k) == 0:
        out.append(_uv_power(spec, 2 * k * (d // (4 * k))))
    if d > 0 and d % k == 0:
        s = 1
        while n * s <= d:
            if (d - n * s) % 2 == 0:
                r = (d - n * s) // 2
                head = AlgebraElt({Monomial(n * s, 0): 1, Monomial(0, n * s): (-1) ** (r + n * s)})
                out.append(mul(spec, head, _uv_power(spec, r)))
            s += 1
    return out


# ---------------------------------------------------------------------------
# the commutative correspondence theta
# ---------------------------------------------------------------------------


def theta_map(n: int, k: int) -> tuple[int, int]:
    """(m, q) with invariants of G_{n,k} matching those of D_{m,q}, for n >= 3."""
    if n < 3:
        raise ParameterError("theta_map needs n >= 3")
    if n % 2 == 1:
        if k % 2 != 0:
            raise ParameterError("n odd needs k even")
        return (n + k // 2, n)
    if k % 2 != 1:
        raise ParameterError("n even needs k odd")
    return (n // 2 + k, n // 2)


def eta_map(m: int, q: int) -> tuple[int, int]:
    """Inverse of theta_map."""
    if not (1 < q < m):
        raise ParameterError("eta_map needs 1 < q < m")
    if (m - q) % 2 == 0:
        return (q, 2 * (m - q))
    return (2 * q, m - q)


def theta_correspondence(n: int, k: int, N: int = 40) -> dict:
    """Identify the commutative quotient singularity matching A^{G_{n,k}}.

    Valid when the invariant ring is commutative (n or k even, coprime,
    k != 2 mod 4); returns the target group and series/degree evidence.
    """
    if n % 2 == 1 and k % 2 == 1:
        raise ParameterError(f"G_({n},{k}) has noncommutative invariants (n, k both odd)")
    if gcd(n, k) != 1 or k % 4 == 2:
        raise ParameterError(f"G_({n},{k}) is outside the classified commutative cases")
    G = GroupSpec.gnk(n, k)
    qm1 = G.ambient
    comm = AlgebraSpec.commutative()
    if n == 1:
        target = {"kind": "cyclic", "order": 2 * k, "weight": k + 1}
        target_group = GroupSpec.cyclic(2 * k, k + 1, comm)
        target_degrees = sorted(typeA_data(2 * k, k + 1).generator_degrees())
    elif n == 2:
        target = {"kind": "cyclic", "order": 4 * k, "weight": 2 * k + 1}
        target_group = GroupSpec.cyclic(4 * k, 2 * k + 1, comm)
        target_degrees = sorted(typeA_data(4 * k, 2 * k + 1).generator_degrees())
    else:
        m, q = theta_map(n, k)
        target = {"kind": "dihedral", "m": m, "q": q}
        target_group = GroupSpec.dihedral(m, q)
        target_degrees = sorted(typeD_data(m, q).generator_degrees())
    series_nk = molien(qm1, G, N)
    series_target = molien(comm, target_group, N)
    series_equal = series_nk == series_target
    gens = generator_set(qm1, G)
    degrees_equal = sorted(gens.degrees) == target_degrees
    evidence = {
        "N": N,
        "molien_equal": series_equal,
        "molien_gnk": series_nk.integer_coeffs(),
        "generator_degrees_gnk": sorted(gens.degrees),
        "generator_degrees_target": target_degrees,
        "generator_degrees_equal": degrees_equal,
    }
    if n <= 2:
        evidence["intermediate_transforms_ok"] = _theta_intermediate_checks(n, k)
    if not (series_equal and degrees_equal):
        raise InternalInconsistencyError(
            f"theta evidence failed for G_({n},{k}): series {series_equal}, "
            f"degrees {degrees_equal}"
        )
    return {"source": {"n": n, "k": k}, "target": target, "evidence": evidence}


def _theta_intermediate_checks(n: int, k: int) -> bool:
    """The printed transformation laws of the intermediate x, y, z coordinates."""
    spec = AlgebraSpec.quantum(Cyclo.from_rational(-1))
    G = GroupSpec.gnk(n, k)
    m = G.root_order
    w = Cyclo.root(m)
    _, h = G.generators()
    u2 = AlgebraElt.monomial(1, 2, 0)
    v2 = AlgebraElt.monomial(1, 0, 2)
    uv = AlgebraElt.monomial(2, 1, 1)
    if n == 1:
        # h^(k/2+1): x -> w^2 x, y -> w^2 y, z -> w^(k+2) z, with x = w^(k/2)(u^2-v^2)
        e = k // 2 + 1
        x = (u2 - v2).scale(w ** (k // 2))
    else:
        ell = k + 1 if k % 4 == 1 else 3 * k + 1
        e = ell // 2
        x = (u2 - v2).scale(w ** k)
    y, z = uv, u2 + v2
    hp = h
    for _ in range(e - 1):
        hp = hp @ h
    got_x = apply_aut(spec, hp, x, checked=False)
    got_y = apply_aut(spec, hp, y, checked=False)
    got_z = apply_aut(spec, hp, z, checked=False)
    z_scale = w ** (k + 2) if n == 1 else w ** (2 * k + 2)
    ok = (
        got_x == x.scale(w ** 2)
        and got_y == y.scale(w ** 2)
        and got_z == z.scale(z_scale)
    )
    # the sphere relation x^2 + y^2 + z^2 = 0 holds inside the (-1)-plane
    sphere = mul(spec, x, x) + mul(spec, y, y) + mul(spec, z, z)
    return ok and sphere.is_zero()
