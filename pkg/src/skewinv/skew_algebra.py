"""Normal-form arithmetic in the quantum plane and the Jordan plane.

Elements are stored as sparse maps {(i, j): coefficient} over Q(w_m), in
normal form (all powers of u to the left of all powers of v).  The quantum
plane has the relation v*u = q*u*v; the Jordan plane has v*u = u*v + u^2.
The commutative plane is the quantum plane with q = 1.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterator, NamedTuple

from .errors import InvalidAutomorphismError, ParameterError
from .scalars import Cyclo, gen_binomial


class Monomial(NamedTuple):
    i: int  # exponent of u
    j: int  # exponent of v

    @property
    def degree(self) -> int:
        return self.i + self.j


def _coerce_scalar(c) -> Cyclo:
    if isinstance(c, Cyclo):
        return c
    return Cyclo.from_rational(c)


class AlgebraElt:
    """Skew polynomial in normal form; immutable by convention."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[Monomial, Cyclo] | None = None):
        self.terms: dict[Monomial, Cyclo] = {}
        if terms:
            for mon, c in terms.items():
                c = _coerce_scalar(c)
                if not c.is_zero():
                    self.terms[Monomial(*mon)] = c

    @staticmethod
    def zero() -> "AlgebraElt":
        return AlgebraElt()

    @staticmethod
    def one() -> "AlgebraElt":
        return AlgebraElt.monomial(1, 0, 0)

    @staticmethod
    def monomial(c, i: int, j: int) -> "AlgebraElt":
        if i < 0 or j < 0:
            raise ParameterError("monomial exponents must be non-negative")
        return AlgebraElt({Monomial(i, j): _coerce_scalar(c)})

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Maximal total degree; -1 for the zero element."""
        return max((m.degree for m in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        degs = {m.degree for m in self.terms}
        return len(degs) <= 1

    def items(self) -> Iterator[tuple[Monomial, Cyclo]]:
        return iter(sorted(self.terms.items()))

    def coefficient(self, i: int, j: int) -> Cyclo:
        return self.terms.get(Monomial(i, j), Cyclo.zero())

    def __add__(self, other: "AlgebraElt") -> "AlgebraElt":
        out = dict(self.terms)
        for mon, c in other.terms.items():
            cur = out.get(mon)
            new = c if cur is None else cur + c
            if new.is_zero():
                out.pop(mon, None)
            else:
                out[mon] = new
        res = AlgebraElt()
        res.terms = out
        return res

    def __neg__(self) -> "AlgebraElt":
        res = AlgebraElt()
        res.terms = {m: -c for m, c in self.terms.items()}
        return res

    def __sub__(self, other: "AlgebraElt") -> "AlgebraElt":
        return self + (-other)

    def scale(self, c) -> "AlgebraElt":
        c = _coerce_scalar(c)
        if c.is_zero():
            return AlgebraElt.zero()
        res = AlgebraElt()
        res.terms = {m: v * c for m, v in self.terms.items()}
        return res

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgebraElt):
            return NotImplemented
        if set(self.terms) != set(other.terms):
            return False
        return all(c == other.terms[m] for m, c in self.terms.items())

    __hash__ = None

    def __repr__(self) -> str:
        return f"AlgebraElt({to_text(self)!r})"


def to_text(elt: AlgebraElt) -> str:
    """Canonical rendering "c * u^i * v^j + ..." in ascending (i, j)-lex order."""
    if elt.is_zero():
        return "0"
    parts = [f"{c} * u^{m.i} * v^{m.j}" for m, c in sorted(elt.terms.items())]
    return " + ".join(parts)


class AlgebraSpec:
    """Which plane we work in; q is kept exactly as a cyclotomic scalar."""

    __slots__ = ("kind", "q")

    def __init__(self, kind: str, q: Cyclo | None = None):
        if kind not in ("quantum", "jordan"):
            raise ParameterError(f"unknown algebra kind {kind!r}")
        if kind == "quantum":
            if q is None:
                raise ParameterError("quantum plane needs a parameter q")
            q = _coerce_scalar(q)
            if q.is_zero():
                raise ParameterError("q must be nonzero")
        else:
            if q is not None:
                raise ParameterError("the Jordan plane has no q parameter")
        self.kind = kind
        self.q = q

    @staticmethod
    def quantum(q) -> "AlgebraSpec":
        return AlgebraSpec("quantum", _coerce_scalar(q))

    @staticmethod
    def jordan() -> "AlgebraSpec":
        return AlgebraSpec("jordan")

    @staticmethod
    def commutative() -> "AlgebraSpec":
        return AlgebraSpec("quantum", Cyclo.one())

    @property
    def is_quantum(self) -> bool:
        return self.kind == "quantum"

    @property
    def is_commutative(self) -> bool:
        return self.is_quantum and self.q.is_one()

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgebraSpec):
            return NotImplemented
        if self.kind != other.kind:
            return False
        return self.kind == "jordan" or self.q == other.q

    __hash__ = None

    def __repr__(self) -> str:
        return "jordan" if self.kind == "jordan" else f"quantum(q={self.q})"

    def describe(self) -> str:
        if self.kind == "jordan":
            return "jordan"
        if self.is_commutative:
            return "commutative"
        return f"quantum(q={self.q})"


@lru_cache(maxsize=None)
def _jordan_reorder_coeffs(i: int, j: int) -> tuple[tuple[int, Fraction], ...]:
    # v^i u^j = sum_k k! C(j+k-1, k) C(i, k) u^(j+k) v^(i-k)
    out = []
    fact = 1
    for k in range(i + 1):
        if k:
            fact *= k
        c = fact * gen_binomial(j + k - 1, k) * gen_binomial(i, k)
        if c:
            out.append((k, c))
    return tuple(out)


def reorder(spec: AlgebraSpec, i: int, j: int) -> AlgebraElt:
    """Normal form of v^i u^j."""
    if i < 0 or j < 0:
        raise ParameterError("exponents must be non-negative")
    if i == 0 or j == 0:
        return AlgebraElt.monomial(1, j, i)
    if spec.is_quantum:
        return AlgebraElt.monomial(spec.q ** (i * j), j, i)
    res = AlgebraElt()
    res.terms = {
        Monomial(j + k, i - k): Cyclo.from_rational(c) for k, c in _jordan_reorder_coeffs(i, j)
    }
    return res


def mul(spec: AlgebraSpec, a: AlgebraElt, b: AlgebraElt) -> AlgebraElt:
    """Exact product in normal form (bilinear extension of reorder)."""
    out: dict[Monomial, Cyclo] = {}
    if spec.is_quantum:
        q = spec.q
        qpow: dict[int, Cyclo] = {}
        for (i1, j1), c1 in a.terms.items():
            for (i2, j2), c2 in b.terms.items():
                e = j1 * i2
                f = qpow.get(e)
                if f is None:
                    f = qpow[e] = q ** e
                mon = Monomial(i1 + i2, j1 + j2)
                c = c1 * c2 * f
                cur = out.get(mon)
                new = c if cur is None else cur + c
                if new.is_zero():
                    out.pop(mon, None)
                else:
                    out[mon] = new
    else:
        for (i1, j1), c1 in a.terms.items():
            for (i2, j2), c2 in b.terms.items():
                c = c1 * c2
                for k, w in _jordan_reorder_coeffs(j1, i2):
                    mon = Monomial(i1 + i2 + k, j1 - k + j2)
                    cc = c * w
                    cur = out.get(mon)
                    new = cc if cur is None else cur + cc
                    if new.is_zero():
                        out.pop(mon, None)
                    else:
                        out[mon] = new
    res = AlgebraElt()
    res.terms = out
    return res


def power(spec: AlgebraSpec, a: AlgebraElt, n: int) -> AlgebraElt:
    if n < 0:
        raise ParameterError("negative powers are not defined in A")
    res = AlgebraElt.one()
    for _ in range(n):
        res = mul(spec, res, a)
    return res


class Mat2:
    """2x2 matrix over Q(w_m) acting by u -> a*u + c*v, v -> b*u + d*v."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a, b, c, d):
        self.a = _coerce_scalar(a)
        self.b = _coerce_scalar(b)
        self.c = _coerce_scalar(c)
        self.d = _coerce_scalar(d)

    @classmethod
    def identity(cls) -> "Mat2":
        return cls(1, 0, 0, 1)

    @classmethod
    def diagonal(cls, a, d) -> "Mat2":
        return cls(a, 0, 0, d)

    @classmethod
    def antidiagonal(cls, b, c) -> "Mat2":
        return cls(0, b, c, 0)

    def det(self) -> Cyclo:
        return self.a * self.d - self.b * self.c

    def __matmul__(self, other: "Mat2") -> "Mat2":
        return Mat2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def entries(self) -> tuple[Cyclo, Cyclo, Cyclo, Cyclo]:
        return (self.a, self.b, self.c, self.d)

    def key_at(self, m: int) -> tuple:
        return tuple(x.key_at(m) for x in self.entries())

    def is_diagonal(self) -> bool:
        return self.b.is_zero() and self.c.is_zero()

    def is_antidiagonal(self) -> bool:
        return self.a.is_zero() and self.d.is_zero()

    def __eq__(self, other) -> bool:
        if not isinstance(other, Mat2):
            return NotImplemented
        return all(x == y for x, y in zip(self.entries(), other.entries()))

    __hash__ = None

    def __repr__(self) -> str:
        return f"Mat2([[{self.a}, {self.b}], [{self.c}, {self.d}]])"


def _relation_vector(spec: AlgebraSpec) -> list[Cyclo]:
    """Defining relation in the degree-2 free-algebra basis (uu, uv, vu, vv)."""
    zero, one = Cyclo.zero(), Cyclo.one()
    if spec.is_quantum:
        return [zero, -spec.q, one, zero]
    return [-one, -one, one, zero]


def relation_image_scalar(spec: AlgebraSpec, M: Mat2) -> Cyclo | None:
    """Scalar by which M acts on the relation line, or None if the line moves.

    The lift of M to the free algebra sends the relation r to lambda * r
    exactly when M is a graded automorphism of the algebra; lambda is then
    the homological determinant.
    """
    a, b, c, d = M.entries()
    # images of the degree-2 free words in the basis (uu, uv, vu, vv):
    # u maps to a*u + c*v and v maps to b*u + d*v, so e.g. vu -> (b u + d v)(a u + c v)
    img = [
        [a * a, a * c, c * a, c * c],  # uu
        [a * b, a * d, c * b, c * d],  # uv
        [b * a, b * c, d * a, d * c],  # vu
        [b * b, b * d, d * b, d * d],  # vv
    ]
    rel = _relation_vector(spec)
    out = [Cyclo.zero()] * 4
    for w in range(4):
        if not rel[w].is_zero():
            for k in range(4):
                out[k] = out[k] + rel[w] * img[w][k]
    # solve out == lambda * rel
    lam = None
    for k in range(4):
        if not rel[k].is_zero():
            lam = out[k] / rel[k]
            break
    assert lam is not None
    for k in range(4):
        if not (out[k] - lam * rel[k]).is_zero():
            return None
    return lam


def validate_automorphism(spec: AlgebraSpec, M: Mat2) -> None:
    """Raise InvalidAutomorphismError unless M is a graded automorphism of spec."""
    if M.det().is_zero():
        raise InvalidAutomorphismError("matrix is not invertible (det = 0)")
    if relation_image_scalar(spec, M) is None:
        raise InvalidAutomorphismError(
            f"matrix does not preserve the defining relation of {spec.describe()}: "
            + _shape_hint(spec)
        )


def _shape_hint(spec: AlgebraSpec) -> str:
    if spec.kind == "jordan":
        return "valid maps have the form [[a, b], [0, a]]"
    if spec.is_commutative:
        return "any invertible matrix is valid"
    if spec.q == -1:
        return "valid maps are diagonal or antidiagonal"
    return "valid maps are diagonal when q != +-1"


def is_valid_automorphism(spec: AlgebraSpec, M: Mat2) -> bool:
    try:
        validate_automorphism(spec, M)
        return True
    except InvalidAutomorphismError:
        return False


def apply_aut(spec: AlgebraSpec, M: Mat2, elt: AlgebraElt, checked: bool = True) -> AlgebraElt:
    """Apply the graded automorphism M to elt (substitute, expand, normalize)."""
    if checked:
        validate_automorphism(spec, M)
    a, b, c, d = M.entries()
    if M.is_diagonal():
        out = AlgebraElt()
        pow_cache: dict[tuple[int, int], Cyclo] = {}
        for (i, j), coeff in elt.terms.items():
            key = (i, j)
            s = pow_cache.get(key)
            if s is None:
                s = pow_cache[key] = (a ** i) * (d ** j)
            out.terms[Monomial(i, j)] = coeff * s
        return out
    if M.is_antidiagonal():
        # u -> c v, v -> b u: u^i v^j -> c^i b^j * v^i u^j, then reorder
        res = AlgebraElt.zero()
        for (i, j), coeff in elt.terms.items():
            res = res + reorder(spec, i, j).scale(coeff * (c ** i) * (b ** j))
        return res
    img_u = AlgebraElt({Monomial(1, 0): a, Monomial(0, 1): c})
    img_v = AlgebraElt({Monomial(1, 0): b, Monomial(0, 1): d})
    res = AlgebraElt.zero()
    pows_u: dict[int, AlgebraElt] = {0: AlgebraElt.one()}
    pows_v: dict[int, AlgebraElt] = {0: AlgebraElt.one()}

    def upow(n: int) -> AlgebraElt:
        while n not in pows_u:
            k = max(pows_u)
            pows_u[k + 1] = mul(spec, pows_u[k], img_u)
        return pows_u[n]

    def vpow(n: int) -> AlgebraElt:
        while n not in pows_v:
            k = max(pows_v)
            pows_v[k + 1] = mul(spec, pows_v[k], img_v)
        return pows_v[n]

    for (i, j), coeff in elt.terms.items():
        res = res + mul(spec, upow(i), vpow(j)).scale(coeff)
    return res
