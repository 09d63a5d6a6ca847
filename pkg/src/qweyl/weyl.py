"""Canonical PBW normal forms for the deformed Heisenberg relation.

Every element is a finite sum of ordered monomials b^i * N^m * a^j with
Scalar coefficients (m is always 0 when the relation has no N).  The
defining data is a ``Relation``:

    a*b = sigma*b*a + remainder

where the remainder is either a central Scalar rho, or a polynomial F(N)
together with the shift rules

    a*g(N) = g(tau*N + 1)*a        g(N)*b = b*g(tau*N + 1).

Reordering a^j b^i is driven by the recurrence

    a b^i = sigma * b * (a b^(i-1)) + b^(i-1) * F(tau^(i-1) N + {i-1})

(with F replaced by the central rho in the N-free case), memoized per
relation because identity checks reuse the same (j, i) pairs thousands of
times.  The memo table is an idempotent function table: concurrent fills
compute identical values, so normal forms are safe to share across workers.
"""

from __future__ import annotations

from fractions import Fraction

from ._backend import kernels as _k
from .scalar import Poly1, Scalar, one, zero

__all__ = [
    "Relation",
    "NormalForm",
    "RelationMismatchError",
    "WordError",
    "heisenberg",
    "hq",
    "extended",
    "nf_of_word",
    "mul",
    "power",
    "commutator",
    "grade",
    "substitute_params",
    "render",
]


class RelationMismatchError(Exception):
    """Normal forms built under different relations were combined."""


class WordError(Exception):
    """A word used the generator N under a relation without N."""


# packed (i, m, j) monomial keys; pure addition composes the b/a offsets
_MASK = (1 << 20) - 1
_KEY0 = 0


def _key(i: int, m: int, j: int) -> int:
    return (i << 40) | (m << 20) | j


def _ikey(key: int) -> tuple[int, int, int]:
    return key >> 40, (key >> 20) & _MASK, key & _MASK


def _mono_text(i: int, m: int, j: int) -> str:
    parts = []
    if i:
        parts.append("b" if i == 1 else "b^%d" % i)
    if m:
        parts.append("N" if m == 1 else "N^%d" % m)
    if j:
        parts.append("a" if j == 1 else "a^%d" % j)
    return "*".join(parts)


class Relation:
    """Reordering data plus the per-relation memo tables."""

    __slots__ = (
        "sigma",
        "rho",
        "F",
        "tau",
        "has_N",
        "memoize",
        "_r1",
        "_r",
        "_mid",
        "_shift_pow",
        "_f_shift",
        "_tau_num",
    )

    def __init__(self, sigma, rho=None, F: Poly1 | None = None, tau=None, memoize: bool = True):
        self.sigma = Scalar.of(sigma)
        self.has_N = F is not None
        if self.has_N:
            if rho is not None:
                raise ValueError("give either a central rho or a polynomial F(N), not both")
            self.F = F if isinstance(F, Poly1) else Poly1([F], "N")
            self.tau = Scalar.of(tau if tau is not None else 1)
            self.rho = None
        else:
            self.rho = Scalar.of(rho if rho is not None else 0)
            self.F = None
            self.tau = None
        self.memoize = memoize
        self._r1: dict = {}
        self._r: dict = {}
        self._mid: dict = {}
        self._shift_pow: dict = {}
        self._f_shift: dict = {}
        self._tau_num: dict = {}

    # -- identity of the defining data, independent of cache state ----------

    def defining_data(self):
        return (self.sigma, self.rho, self.F, self.tau, self.has_N)

    def same_relation(self, other: "Relation") -> bool:
        return self is other or self.defining_data() == other.defining_data()

    def __eq__(self, other):
        return isinstance(other, Relation) and self.same_relation(other)

    def __hash__(self):
        return hash(self.defining_data())

    def describe(self) -> str:
        if self.has_N:
            return "a*b = %s*b*a + F(N), F = %s, tau = %s" % (
                self.sigma.compact(),
                self.F.text(),
                self.tau.compact(),
            )
        return "a*b = %s*b*a + %s" % (self.sigma.compact(), self.rho.compact())

    def bind(self, bindings: dict) -> "Relation":
        """Substitute parameters inside the defining data."""
        if self.has_N:
            return Relation(
                self.sigma.substitute(bindings),
                F=self.F.map_coeffs(lambda c: c.substitute(bindings)),
                tau=self.tau.substitute(bindings),
                memoize=self.memoize,
            )
        return Relation(
            self.sigma.substitute(bindings),
            self.rho.substitute(bindings),
            memoize=self.memoize,
        )

    # -- element constructors -------------------------------------------------

    def unit(self) -> "NormalForm":
        return NormalForm(self, {_KEY0: one}, _clean=True)

    def scalar_nf(self, c) -> "NormalForm":
        c = Scalar.of(c)
        return NormalForm(self, {_KEY0: c} if c else {}, _clean=True)

    def gen(self, letter: str) -> "NormalForm":
        if letter == "a":
            return NormalForm(self, {_key(0, 0, 1): one}, _clean=True)
        if letter == "b":
            return NormalForm(self, {_key(1, 0, 0): one}, _clean=True)
        if letter == "N":
            if not self.has_N:
                raise WordError("generator N is not part of this relation")
            return NormalForm(self, {_key(0, 1, 0): one}, _clean=True)
        raise WordError("unknown generator %r" % letter)

    def word(self, letters) -> "NormalForm":
        out = self.unit()
        for ch in letters:
            out = out * self.gen(ch)
        return out

    def npoly_nf(self, poly: Poly1) -> "NormalForm":
        if not self.has_N and poly.degree() not in (float("-inf"), 0):
            raise WordError("polynomial in N under a relation without N")
        return NormalForm(self, {_key(0, m, 0): c for m, c in enumerate(poly.coeffs) if c})

    # -- reordering engine -----------------------------------------------------

    def tau_number(self, n: int) -> Scalar:
        """{n} with base tau: 1 + tau + ... + tau^(n-1)."""
        got = self._tau_num.get(n)
        if got is None:
            base = self.tau if self.has_N else self.sigma
            got = zero
            for s in range(n):
                got = got + base**s
            self._tau_num[n] = got
        return got

    def _shiftpow(self, m: int, t: int) -> Poly1:
        """(tau^t N + {t})^m, the result of moving N^m across t letters."""
        got = self._shift_pow.get((m, t))
        if got is None:
            affine = Poly1([self.tau_number(t), self.tau**t], "N")
            got = affine**m
            if self.memoize:
                self._shift_pow[(m, t)] = got
        return got

    def _fshift(self, t: int) -> Poly1:
        """F(tau^t N + {t}): the remainder after crossing b^t."""
        got = self._f_shift.get(t)
        if got is None:
            got = self.F.compose_affine(self.tau**t, self.tau_number(t))
            if self.memoize:
                self._f_shift[t] = got
        return got

    def _R1(self, i: int) -> dict:
        """Term map of a * b^i."""
        if i == 0:
            return {_key(0, 0, 1): one}
        got = self._r1.get(i)
        if got is None:
            prev = self._R1(i - 1)
            out: dict = {}
            up = 1 << 40
            sigma = self.sigma
            for k, c in prev.items():
                out[k + up] = sigma * c
            base = (i - 1) << 40
            if self.has_N:
                for m, c in enumerate(self._fshift(i - 1).coeffs):
                    if c:
                        kk = base | (m << 20)
                        got0 = out.get(kk)
                        out[kk] = c if got0 is None else got0 + c
            else:
                if self.rho:
                    got0 = out.get(base)
                    s = self.rho if got0 is None else got0 + self.rho
                    if s:
                        out[base] = s
                    elif got0 is not None:
                        del out[base]
            out = {k: v for k, v in out.items() if v}
            if self.memoize:
                self._r1[i] = out
            got = out
        return got

    def _R(self, j: int, i: int) -> dict:
        """Term map of a^j * b^i, memoized per (j, i)."""
        if j == 0:
            return {_key(i, 0, 0): one}
        if i == 0:
            return {_key(0, 0, j): one}
        if j == 1:
            return self._R1(i)
        got = self._r.get((j, i))
        if got is None:
            prev = self._R(j - 1, i)
            out: dict = {}
            for k, c in prev.items():
                alpha, mu, beta = _ikey(k)
                for k2, c2 in self._R1(alpha).items():
                    g, nu, e = _ikey(k2)
                    cc = c * c2
                    if mu == 0 or e == 0:
                        # plain merge: a^e slides under N^mu only when e > 0
                        _acc(out, _key(g, nu + mu, e + beta), cc)
                    else:
                        for m2, c3 in enumerate(self._shiftpow(mu, e).coeffs):
                            if c3:
                                _acc(out, _key(g, nu + m2, e + beta), cc * c3)
            if self.memoize:
                self._r[(j, i)] = out
            got = out
        return got

    def _mid_product(self, m1: int, j1: int, i2: int, m2: int) -> dict:
        """Term map of N^m1 * a^j1 * b^i2 * N^m2."""
        if m1 == 0 and m2 == 0:
            return self._R(j1, i2)
        key = (m1, j1, i2, m2)
        got = self._mid.get(key)
        if got is None:
            out: dict = {}
            for k, c in self._R(j1, i2).items():
                alpha, mu, beta = _ikey(k)
                npoly = Poly1([zero] * mu + [one], "N")
                if m1:
                    npoly = npoly * self._shiftpow(m1, alpha)
                if m2:
                    npoly = npoly * self._shiftpow(m2, beta)
                for m, c2 in enumerate(npoly.coeffs):
                    if c2:
                        _acc(out, _key(alpha, m, beta), c * c2)
            if self.memoize:
                self._mid[key] = out
            got = out
        return got

    def clear_caches(self) -> None:
        for d in (self._r1, self._r, self._mid, self._shift_pow, self._f_shift, self._tau_num):
            d.clear()


def _acc(out: dict, key: int, c: Scalar) -> None:
    got = out.get(key)
    if got is None:
        if c:
            out[key] = c
    else:
        s = got + c
        if s:
            out[key] = s
        else:
            del out[key]


def heisenberg(sigma, rho, memoize: bool = True) -> Relation:
    """Relation a*b = sigma*b*a + rho with central rho."""
    return Relation(sigma, rho, memoize=memoize)


def hq(p=None, q=None, memoize: bool = True) -> Relation:
    """The deformed Heisenberg relation a*b - q*b*a = p.

    Omitted parameters stay symbolic.  Note the slot naming: sigma is the
    coefficient on b*a (the deformation), rho the central remainder.
    """
    from .scalar import P as _P, Q as _Q

    sigma = _Q if q is None else Scalar.of(q)
    rho = _P if p is None else Scalar.of(p)
    return Relation(sigma, rho, memoize=memoize)


def extended(sigma=None, F: Poly1 | None = None, tau=None, memoize: bool = True) -> Relation:
    """The three-generator relation a*b - sigma*b*a = F(N) with N-shifts by tau.

    Defaults: sigma = p (symbolic), F = 1, tau = q (symbolic).
    """
    from .scalar import P as _P, Q as _Q

    sigma = _P if sigma is None else sigma
    F = Poly1([1], "N") if F is None else F
    tau = _Q if tau is None else tau
    return Relation(sigma, F=F, tau=tau, memoize=memoize)


class NormalForm:
    """A finite Scalar-combination of PBW monomials b^i N^m a^j."""

    __slots__ = ("rel", "terms")

    def __init__(self, rel: Relation, terms: dict, *, _clean: bool = False):
        self.rel = rel
        self.terms = terms if _clean else {k: v for k, v in terms.items() if v}

    # -- inspection ------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def items(self):
        """Iterate ((i, m, j), coefficient) pairs."""
        for k, v in self.terms.items():
            yield _ikey(k), v

    def monomials(self):
        return sorted((_ikey(k) for k in self.terms), reverse=True)

    def coefficient(self, i: int, m: int = 0, j: int = 0) -> Scalar:
        return self.terms.get(_key(i, m, j), zero)

    def grade(self):
        """Common i - j over all monomials, or None when inhomogeneous."""
        grades = {(k >> 40) - (k & _MASK) for k in self.terms}
        if len(grades) == 1:
            return grades.pop()
        return None

    def __eq__(self, other):
        if not isinstance(other, NormalForm):
            return NotImplemented
        if not self.rel.same_relation(other.rel):
            raise RelationMismatchError("comparing normal forms from different relations")
        return self.terms == other.terms

    # -- algebra ----------------------------------------------------------------

    def _check(self, other: "NormalForm") -> None:
        if not self.rel.same_relation(other.rel):
            raise RelationMismatchError("mixing normal forms from different relations")

    def __add__(self, other):
        other = self._lift(other)
        self._check(other)
        return NormalForm(self.rel, _k.mpoly_add(self.terms, other.terms), _clean=True)

    def __sub__(self, other):
        other = self._lift(other)
        self._check(other)
        return NormalForm(self.rel, _k.mpoly_sub(self.terms, other.terms), _clean=True)

    def __neg__(self):
        return NormalForm(self.rel, {k: -v for k, v in self.terms.items()}, _clean=True)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            return self.scale(other)
        self._check(other)
        out: dict = {}
        rel = self.rel
        for k1, c1 in self.terms.items():
            i1, m1, j1 = _ikey(k1)
            for k2, c2 in other.terms.items():
                i2, m2, j2 = _ikey(k2)
                mid = rel._mid_product(m1, j1, i2, m2)
                _k.axpy_shift(out, mid, (i1 << 40) + j2, c1 * c2)
        return NormalForm(self.rel, out, _clean=True)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            return self.scale(other)
        return NotImplemented

    def scale(self, c) -> "NormalForm":
        c = Scalar.of(c)
        if not c:
            return NormalForm(self.rel, {}, _clean=True)
        return NormalForm(self.rel, {k: c * v for k, v in self.terms.items()})

    def __pow__(self, n: int) -> "NormalForm":
        if n < 0:
            raise ValueError("normal forms admit non-negative powers only")
        out = self.rel.unit()
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def _lift(self, other) -> "NormalForm":
        if isinstance(other, NormalForm):
            return other
        return self.rel.scalar_nf(other)

    # -- parameter specialization -------------------------------------------------

    def substitute(self, bindings: dict) -> "NormalForm":
        """Coefficient-wise substitution; the relation is rebound to match."""
        rel = self.rel.bind(bindings)
        return NormalForm(rel, {k: v.substitute(bindings) for k, v in self.terms.items()})

    # -- rendering ------------------------------------------------------------------

    def render(self) -> str:
        """Canonical text: terms by (i, m, j) descending, e.g. ``q*b*a + p``."""
        if not self.terms:
            return "0"
        pieces = []
        for k in sorted(self.terms, key=_ikey, reverse=True):
            c = self.terms[k]
            mono = _mono_text(*_ikey(k))
            negative = c.is_negative_term()
            if negative:
                c = -c
            ct = c.compact()
            if not mono:
                text = ct
            elif ct == "1":
                text = mono
            else:
                text = "%s*%s" % (ct, mono)
            if not pieces:
                pieces.append("-" + text if negative else text)
            else:
                pieces.append((" - " if negative else " + ") + text)
        return "".join(pieces)

    def __repr__(self):
        return "NormalForm(%s)" % self.render()

    def __str__(self):
        return self.render()


# -- module-level operation set ----------------------------------------------------


def nf_of_word(word, rel: Relation) -> NormalForm:
    """Normal form of a product of generators, e.g. ``nf_of_word("abb", rel)``."""
    return rel.word(word)


def mul(x: NormalForm, y: NormalForm) -> NormalForm:
    return x * y


def power(x: NormalForm, n: int) -> NormalForm:
    return x**n


def commutator(x: NormalForm, y: NormalForm) -> NormalForm:
    return x * y - y * x


def grade(x: NormalForm):
    return x.grade()


def substitute_params(x: NormalForm, bindings: dict) -> NormalForm:
    return x.substitute(bindings)


def render(x: NormalForm) -> str:
    return x.render()
