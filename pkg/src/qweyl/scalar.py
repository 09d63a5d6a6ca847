"""Exact coefficient arithmetic for the normal-ordering engine.

A coefficient (``Scalar``) is a reduced quotient num/den of sparse
multivariate polynomials over the rationals in the fixed indeterminates

    p, q, A, d

where ``q`` may carry negative (Laurent) exponents, the other three may not,
and ``d`` is the ASCII spelling of the shift step delta.  ``A`` stands for
the symbolic power q^alpha, so eliminating ``q`` from an expression that
still mentions ``A`` is refused unless ``A`` is bound first.

Canonical form: gcd(num, den) is a unit, den carries no negative exponents
and is not divisible by q, and the leading coefficient of den under the
fixed graded-lex term order is +1.  Scalar equality is structural equality
of the two term maps, so equal values always compare equal.

Polynomials are dicts from a packed exponent key to an ``int`` or
``fractions.Fraction``; the dict arithmetic lives in the kernel backend
(compiled when available, pure Python otherwise).
"""

from __future__ import annotations

import math
from fractions import Fraction

from ._backend import kernels as _k

__all__ = [
    "Scalar",
    "ScalarError",
    "ScalarDivisionError",
    "SubstitutionError",
    "NotDivisibleError",
    "VAR_NAMES",
    "symbol",
    "zero",
    "one",
    "P",
    "Q",
    "A",
    "D",
    "qnum",
    "qnum_symbolic",
    "qnum_double_alpha",
    "scalar_arith",
    "substitute",
    "Poly1",
    "RatFun1",
]


class ScalarError(Exception):
    """Base class for coefficient-arithmetic errors."""


class ScalarDivisionError(ScalarError):
    """Division by the zero Scalar."""


class SubstitutionError(ScalarError):
    """Ill-formed substitution (bad variable, vanishing denominator, ...)."""


class NotDivisibleError(ScalarError):
    """Exact polynomial division requested where none exists."""


# ---------------------------------------------------------------------------
# packed exponent keys
#
# Four 20-bit fields, most significant first: p, q, A, d.  The q field is
# biased so Laurent exponents stay non-negative inside the key.  Adding two
# keys and subtracting KEY_ONE multiplies the monomials.

VAR_NAMES = ("p", "q", "A", "d")
_NVARS = 4
_FIELD_BITS = 20
_FIELD_MASK = (1 << _FIELD_BITS) - 1
_SHIFTS = (60, 40, 20, 0)
_QOFF = 1 << 19
_EXP_LIMIT = (1 << 19) - 1

KEY_ONE = _QOFF << 40  # all exponents zero


def _pack(ep: int, eq: int, ea: int, ed: int) -> int:
    if not (0 <= ep <= _EXP_LIMIT and 0 <= ea <= _EXP_LIMIT and 0 <= ed <= _EXP_LIMIT):
        raise ScalarError("exponent out of range (p, A, d must be 0..%d)" % _EXP_LIMIT)
    if not (-_QOFF < eq <= _EXP_LIMIT):
        raise ScalarError("q exponent out of range")
    return (ep << 60) | ((eq + _QOFF) << 40) | (ea << 20) | ed


def _unpack(key: int) -> tuple[int, int, int, int]:
    return (
        key >> 60,
        ((key >> 40) & _FIELD_MASK) - _QOFF,
        (key >> 20) & _FIELD_MASK,
        key & _FIELD_MASK,
    )


def _order_key(key: int):
    # graded-lex: total degree first, then the exponent vector
    e = _unpack(key)
    return (e[0] + e[1] + e[2] + e[3],) + e


# ---------------------------------------------------------------------------
# raw polynomial helpers (term-map level)

_MP_ONE = {KEY_ONE: 1}


def _mp_const(c) -> dict:
    return {KEY_ONE: c} if c else {}


def _mp_var(idx: int, exp: int = 1) -> dict:
    e = [0, 0, 0, 0]
    e[idx] = exp
    return {_pack(*e): 1}


def _mp_min_qexp(f: dict) -> int:
    return min((((k >> 40) & _FIELD_MASK) - _QOFF) for k in f)


def _mp_qshift(f: dict, n: int) -> dict:
    if n == 0:
        return f
    off = n << 40
    return {k + off: v for k, v in f.items()}


def _mp_leading(f: dict) -> int:
    return max(f, key=_order_key)


def _mp_uses(f: dict, idx: int) -> bool:
    shift = _SHIFTS[idx]
    if idx == 1:
        return any((((k >> shift) & _FIELD_MASK) - _QOFF) != 0 for k in f)
    return any(((k >> shift) & _FIELD_MASK) != 0 for k in f)


def _mp_degrees(f: dict, idx: int) -> tuple[int, int]:
    """(min, max) exponent of variable idx over the terms of f."""
    shift = _SHIFTS[idx]
    off = _QOFF if idx == 1 else 0
    exps = [((k >> shift) & _FIELD_MASK) - off for k in f]
    return min(exps), max(exps)


def _mp_divexact(f: dict, g: dict) -> dict:
    """Exact division f/g of non-Laurent term maps; raises NotDivisibleError."""
    if not g:
        raise ScalarDivisionError("polynomial division by zero")
    if not f:
        return {}
    kg = _mp_leading(g)
    cg = g[kg]
    eg = _unpack(kg)
    out: dict = {}
    r = dict(f)
    while r:
        kr = _mp_leading(r)
        er = _unpack(kr)
        if any(er[i] < eg[i] for i in range(_NVARS)):
            raise NotDivisibleError("leading term not divisible")
        dk = kr - kg + KEY_ONE
        cr = r[kr]
        if isinstance(cr, int) and isinstance(cg, int) and cg != 0 and cr % cg == 0:
            c = cr // cg
        else:
            c = Fraction(cr) / Fraction(cg)
            if c.denominator == 1:
                c = c.numerator
        out[dk] = c
        r = _k.mpoly_sub(r, _k.mpoly_mul_term(g, dk, c, KEY_ONE))
    return out


def _mp_int(f: dict) -> dict:
    """Scale to integer coefficients (the scale is irrelevant for gcd)."""
    lcm = 1
    for v in f.values():
        if isinstance(v, Fraction):
            lcm = lcm * v.denominator // math.gcd(lcm, v.denominator)
    if lcm == 1:
        return {k: int(v) for k, v in f.items()}
    return {k: int(v * lcm) for k, v in f.items()}


def _mp_icontent(f: dict) -> int:
    g = 0
    for v in f.values():
        g = math.gcd(g, abs(v))
        if g == 1:
            return 1
    return g or 1


def _mp_monomial_gcd(f: dict, g: dict) -> dict:
    """Componentwise-min monomial common to every term of f and of g."""
    mins = [None, None, None, None]
    for poly in (f, g):
        for k in poly:
            e = _unpack(k)
            for i in range(_NVARS):
                if mins[i] is None or e[i] < mins[i]:
                    mins[i] = e[i]
    return {_pack(*mins): 1}


def _split_by_var(f: dict, idx: int) -> list[dict]:
    """Dense coefficient list of f viewed as univariate in variable idx."""
    shift = _SHIFTS[idx]
    off = _QOFF if idx == 1 else 0
    deg = max(((k >> shift) & _FIELD_MASK) - off for k in f)
    out: list[dict] = [dict() for _ in range(deg + 1)]
    for k, v in f.items():
        e = ((k >> shift) & _FIELD_MASK) - off
        out[e][k - (e << shift)] = v
    return out


def _join_by_var(coeffs: list[dict], idx: int) -> dict:
    shift = _SHIFTS[idx]
    out: dict = {}
    for e, sub in enumerate(coeffs):
        off = e << shift
        for k, v in sub.items():
            out[k + off] = v
    return out


def _list_deg(u: list[dict]) -> int:
    d = len(u) - 1
    while d >= 0 and not u[d]:
        d -= 1
    return d


def _list_content(u: list[dict]) -> dict:
    g: dict = {}
    for c in u:
        if c:
            g = _mp_gcd_int(g, c)
    return g


def _list_primitive(u: list[dict]) -> list[dict]:
    cont = _list_content(u)
    if cont == _MP_ONE or not cont:
        return u
    return [_mp_divexact(c, cont) if c else {} for c in u]


def _prem(u: list[dict], w: list[dict]) -> list[dict]:
    """Pseudo-remainder of u by w (both dense lists of term maps)."""
    du, dw = _list_deg(u), _list_deg(w)
    lw = w[dw]
    r = [dict(c) for c in u]
    while True:
        dr = _list_deg(r)
        if dr < dw:
            return [c for c in r[: dr + 1]]
        lr = r[dr]
        r = [_k.mpoly_mul(c, lw, KEY_ONE) if c else {} for c in r]
        shift = dr - dw
        for i in range(dw + 1):
            if w[i]:
                r[i + shift] = _k.mpoly_sub(r[i + shift], _k.mpoly_mul(lr, w[i], KEY_ONE))
        r[dr] = {}


def _mp_gcd_int(f: dict, g: dict) -> dict:
    """Gcd of non-Laurent integer term maps, up to a unit.

    Primitive-part / content recursion on a dense-in-one-variable view,
    which is plenty at the degree ranges the engine produces.
    """
    if not f:
        return dict(g)
    if not g:
        return dict(f)
    if len(f) == 1 or len(g) == 1:
        m = _mp_monomial_gcd(f, g)
        c = math.gcd(_mp_icontent(f), _mp_icontent(g))
        if c != 1:
            m = {k: c for k in m}
        return m
    pvars = [i for i in range(_NVARS) if _mp_uses(f, i) or _mp_uses(g, i)]
    if not pvars:
        return _mp_const(math.gcd(_mp_icontent(f), _mp_icontent(g)))
    # pick the present variable with the smallest combined degree
    idx = min(pvars, key=lambda i: max(_mp_degrees(f, i)[1], _mp_degrees(g, i)[1]))
    uf, ug = _split_by_var(f, idx), _split_by_var(g, idx)
    cf, cg = _list_content(uf), _list_content(ug)
    cont = _mp_gcd_int(cf, cg)
    u = _list_primitive(uf)
    w = _list_primitive(ug)
    if _list_deg(u) < _list_deg(w):
        u, w = w, u
    while True:
        dw = _list_deg(w)
        if dw < 0:
            gcd_pp = u
            break
        if dw == 0:
            gcd_pp = [_MP_ONE]
            break
        r = _prem(u, w)
        u, w = w, _list_primitive([_mp_int(c) for c in r])
    gcd_pp = _list_primitive(gcd_pp)
    result = _join_by_var(gcd_pp, idx)
    if cont != _MP_ONE:
        result = _k.mpoly_mul(result, cont, KEY_ONE)
    return result


def _mp_gcd(f: dict, g: dict) -> dict:
    return _mp_gcd_int(_mp_int(f), _mp_int(g))


def _coeff_norm(v):
    if isinstance(v, Fraction) and v.denominator == 1:
        return v.numerator
    return v


def _mp_text(f: dict) -> str:
    """Terms in descending graded-lex order: ``q^2 + q + 1``, ``-p + 1``."""
    if not f:
        return "0"
    pieces = []
    for k in sorted(f, key=_order_key, reverse=True):
        v = _coeff_norm(f[k])
        neg = v < 0
        mag = -v if neg else v
        factors = []
        for name, e in zip(VAR_NAMES, _unpack(k)):
            if e == 1:
                factors.append(name)
            elif e != 0:
                factors.append("%s^%d" % (name, e))
        if not factors or mag != 1:
            factors.insert(0, str(mag))
        text = "*".join(factors)
        if not pieces:
            pieces.append("-" + text if neg else text)
        else:
            pieces.append((" - " if neg else " + ") + text)
    return "".join(pieces)


# ---------------------------------------------------------------------------
# Scalar


def _normalize(num: dict, den: dict) -> tuple[dict, dict]:
    if not den:
        raise ScalarDivisionError("zero denominator")
    if not num:
        return {}, dict(_MP_ONE)
    vn = _mp_min_qexp(num)
    vd = _mp_min_qexp(den)
    num = _mp_qshift(num, -vn)
    den = _mp_qshift(den, -vd)
    qnet = vn - vd
    if len(den) == 1 and next(iter(den)) == KEY_ONE:
        pass  # constant denominator: unit scaling below is all that is needed
    elif len(num) == 1 or len(den) == 1:
        m = next(iter(_mp_monomial_gcd(num, den)))
        if m != KEY_ONE:
            num = _mp_divexact(num, {m: 1})
            den = _mp_divexact(den, {m: 1})
    else:
        g = _mp_gcd(num, den)
        if len(g) > 1 or next(iter(g)) != KEY_ONE:
            num = _mp_divexact(num, g)
            den = _mp_divexact(den, g)
    if qnet:
        num = _mp_qshift(num, qnet)
    c = den[_mp_leading(den)]
    if c != 1:
        inv = Fraction(1, 1) / Fraction(c)
        num = {k: _coeff_norm(v * inv) for k, v in num.items()}
        den = {k: _coeff_norm(v * inv) for k, v in den.items()}
    return num, den


class Scalar:
    """A reduced quotient of sparse polynomials in p, q, A, d over Q."""

    __slots__ = ("num", "den")

    def __init__(self, num: dict, den: dict | None = None, *, _normalized: bool = False):
        if den is None:
            den = dict(_MP_ONE)
        if _normalized:
            self.num, self.den = num, den
        else:
            self.num, self.den = _normalize(num, den)

    # -- constructors -------------------------------------------------------

    @staticmethod
    def of(value) -> "Scalar":
        """Coerce an int, Fraction or Scalar."""
        if isinstance(value, Scalar):
            return value
        if isinstance(value, int):
            return Scalar(_mp_const(value), None, _normalized=True)
        if isinstance(value, Fraction):
            return Scalar(_mp_const(_coeff_norm(value)), None, _normalized=True)
        raise ScalarError("cannot coerce %r to Scalar" % (value,))

    @staticmethod
    def variable(name: str, exp: int = 1) -> "Scalar":
        idx = VAR_NAMES.index(name)
        if exp < 0 and idx != 1:
            raise ScalarError("only q admits negative exponents")
        return Scalar(_mp_var(idx, exp), None, _normalized=True)

    # -- predicates ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.num

    def is_one(self) -> bool:
        return self.num == _MP_ONE and self.den == _MP_ONE

    def __bool__(self) -> bool:
        return bool(self.num)

    def is_constant(self) -> bool:
        return (not self.num or set(self.num) == {KEY_ONE}) and self.den == _MP_ONE

    def as_fraction(self) -> Fraction:
        if not self.is_constant():
            raise ScalarError("not a constant: %s" % self)
        if not self.num:
            return Fraction(0)
        return Fraction(self.num[KEY_ONE])

    def uses(self, name: str) -> bool:
        idx = VAR_NAMES.index(name)
        return _mp_uses(self.num, idx) or _mp_uses(self.den, idx)

    def numerator_divisible_by(self, probe: "Scalar") -> bool:
        """Exact-division test of the numerator by a polynomial probe."""
        if probe.den != _MP_ONE or not probe.num:
            raise ScalarError("probe must be a nonzero polynomial")
        if not self.num:
            return True
        # clear Laurent q powers on both sides; q-units never block divisibility
        num = _mp_qshift(self.num, -_mp_min_qexp(self.num))
        div = _mp_qshift(probe.num, -_mp_min_qexp(probe.num))
        try:
            _mp_divexact(num, div)
            return True
        except NotDivisibleError:
            return False

    # -- arithmetic ----------------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, Scalar):
            return other
        if isinstance(other, (int, Fraction)):
            return Scalar.of(other)
        return None

    def __add__(self, other):
        other = Scalar._coerce(other)
        if other is None:
            return NotImplemented
        if self.den == _MP_ONE and other.den == _MP_ONE:
            return Scalar(_k.mpoly_add(self.num, other.num), None, _normalized=True)
        n = _k.mpoly_add(
            _k.mpoly_mul(self.num, other.den, KEY_ONE),
            _k.mpoly_mul(other.num, self.den, KEY_ONE),
        )
        return Scalar(n, _k.mpoly_mul(self.den, other.den, KEY_ONE))

    __radd__ = __add__

    def __sub__(self, other):
        other = Scalar._coerce(other)
        if other is None:
            return NotImplemented
        if self.den == _MP_ONE and other.den == _MP_ONE:
            return Scalar(_k.mpoly_sub(self.num, other.num), None, _normalized=True)
        n = _k.mpoly_sub(
            _k.mpoly_mul(self.num, other.den, KEY_ONE),
            _k.mpoly_mul(other.num, self.den, KEY_ONE),
        )
        return Scalar(n, _k.mpoly_mul(self.den, other.den, KEY_ONE))

    def __rsub__(self, other):
        other = Scalar._coerce(other)
        if other is None:
            return NotImplemented
        return other.__sub__(self)

    def __neg__(self):
        return Scalar(_k.mpoly_neg(self.num), dict(self.den), _normalized=True)

    def __mul__(self, other):
        other = Scalar._coerce(other)
        if other is None:
            return NotImplemented
        if self.den == _MP_ONE and other.den == _MP_ONE:
            return Scalar(_k.mpoly_mul(self.num, other.num, KEY_ONE), None, _normalized=True)
        return Scalar(
            _k.mpoly_mul(self.num, other.num, KEY_ONE),
            _k.mpoly_mul(self.den, other.den, KEY_ONE),
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = Scalar._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise ScalarDivisionError("division by zero Scalar")
        return Scalar(
            _k.mpoly_mul(self.num, other.den, KEY_ONE),
            _k.mpoly_mul(self.den, other.num, KEY_ONE),
        )

    def __rtruediv__(self, other):
        other = Scalar._coerce(other)
        if other is None:
            return NotImplemented
        return other.__truediv__(self)

    def __pow__(self, n: int):
        if n == 0:
            return one
        if n < 0:
            return (one / self) ** (-n)
        base, out = self, None
        while n:
            if n & 1:
                out = base if out is None else out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Scalar.of(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash(
            (frozenset((k, _coeff_norm(v)) for k, v in self.num.items()),
             frozenset((k, _coeff_norm(v)) for k, v in self.den.items()))
        )

    # -- substitution --------------------------------------------------------

    def substitute(self, bindings: dict) -> "Scalar":
        return substitute(self, bindings)

    def rename_variable(self, src: str, dst: str) -> "Scalar":
        """Rename variable src to dst; dst must be absent from the value."""
        if src == dst:
            return self
        if self.uses(dst):
            raise SubstitutionError("target variable %s already present" % dst)
        return substitute(self, {src: Scalar.variable(dst)}, _allow_alpha=True)

    # -- rendering -----------------------------------------------------------

    def canonical(self) -> str:
        """Cross-check text form, always ``(num)/(den)``."""
        return "(%s)/(%s)" % (_mp_text(self.num), _mp_text(self.den))

    def compact(self) -> str:
        """Short form for use inside larger expressions."""
        if self.den != _MP_ONE:
            return "(%s)/(%s)" % (_mp_text(self.num), _mp_text(self.den))
        if len(self.num) > 1:
            return "(%s)" % _mp_text(self.num)
        return _mp_text(self.num)

    def is_single_term(self) -> bool:
        return self.den == _MP_ONE and len(self.num) <= 1

    def is_negative_term(self) -> bool:
        """True for a single-term value with negative coefficient."""
        if not self.is_single_term() or not self.num:
            return False
        return next(iter(self.num.values())) < 0

    def __repr__(self):
        return "Scalar(%s)" % self.canonical()

    def __str__(self):
        return self.compact()


zero = Scalar.of(0)
one = Scalar.of(1)


def symbol(name: str) -> Scalar:
    return Scalar.variable(name)


P = symbol("p")
Q = symbol("q")
A = symbol("A")
D = symbol("d")


def scalar_arith(x: Scalar, y: Scalar, op: str) -> Scalar:
    """Dispatch form of +, -, *, / used by table-driven callers."""
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        return x / y
    raise ScalarError("unknown op %r" % op)


def qnum(n: int) -> Scalar:
    """The q-number {n} = 1 + q + ... + q^(n-1), built as the explicit sum."""
    if n < 0:
        raise ScalarError("qnum expects n >= 0")
    return Scalar({_pack(0, k, 0, 0): 1 for k in range(n)}, None, _normalized=True)


def qnum_symbolic(shift: int) -> Scalar:
    """{alpha + shift} for shift in {0, 1}, via the substitution A = q^alpha.

    {alpha} = (1 - A)/(1 - q) and {alpha + 1} = (1 - q*A)/(1 - q).
    """
    if shift not in (0, 1):
        raise ScalarError("qnum_symbolic supports shift 0 or 1")
    num = _k.mpoly_sub(_mp_const(1), _mp_var(2))
    if shift:
        num = _k.mpoly_sub(_mp_const(1), _k.mpoly_mul(_mp_var(1), _mp_var(2), KEY_ONE))
    return Scalar(num, _k.mpoly_sub(_mp_const(1), _mp_var(1)))


def qnum_double_alpha() -> Scalar:
    """{2*alpha + 2} = (1 - q^2 A^2)/(1 - q) under A = q^alpha."""
    a2q2 = _k.mpoly_mul(_mp_var(1, 2), _mp_var(2, 2), KEY_ONE)
    return Scalar(
        _k.mpoly_sub(_mp_const(1), a2q2),
        _k.mpoly_sub(_mp_const(1), _mp_var(1)),
    )


def _eval_map(f: dict, values: list["Scalar"], pow_cache: dict) -> Scalar:
    total = zero
    for k, v in f.items():
        term = Scalar.of(v)
        exps = _unpack(k)
        for i in range(_NVARS):
            e = exps[i]
            if e:
                ck = (i, e)
                pw = pow_cache.get(ck)
                if pw is None:
                    pw = values[i] ** e
                    pow_cache[ck] = pw
                term = term * pw
        total = total + term
    return total


def substitute(x: Scalar, bindings: dict, *, _allow_alpha: bool = False) -> Scalar:
    """Substitute variables by rationals or Scalars, then renormalize.

    The binding for A (if any) is applied first because A abbreviates a power
    of q; binding q while A is still present (and unbound) is refused.
    """
    clean: dict[str, Scalar] = {}
    for name, value in bindings.items():
        if name not in VAR_NAMES:
            raise SubstitutionError("unknown variable %r" % name)
        clean[name] = Scalar.of(value)
    if not clean:
        return x
    if "q" in clean and "A" not in clean and x.uses("A") and not _allow_alpha:
        raise SubstitutionError("bind A before (or together with) q: A depends on q")

    cur = x
    if "A" in clean:
        cur = _subst_once(cur, {"A": clean.pop("A")})
    if clean:
        cur = _subst_once(cur, clean)
    return cur


def _subst_once(x: Scalar, bindings: dict[str, Scalar]) -> Scalar:
    values = [Scalar.variable(n) for n in VAR_NAMES]
    for name, val in bindings.items():
        values[VAR_NAMES.index(name)] = val
    cache: dict = {}
    try:
        num = _eval_map(x.num, values, cache)
        den = _eval_map(x.den, values, cache)
        if den.is_zero():
            raise ScalarDivisionError
        return num / den
    except ScalarDivisionError:
        raise SubstitutionError("substitution makes the denominator vanish") from None


# ---------------------------------------------------------------------------
# dense univariate polynomials over Scalar (used for N-polynomials, for the
# representation module's polynomial space, and for Lemma-style expansions)


class Poly1:
    """Dense univariate polynomial with Scalar coefficients."""

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs, var: str = "N"):
        cs = [Scalar.of(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.coeffs = cs
        self.var = var

    @staticmethod
    def const(c, var: str = "N") -> "Poly1":
        return Poly1([Scalar.of(c)], var)

    @staticmethod
    def x(var: str = "N") -> "Poly1":
        return Poly1([zero, one], var)

    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else float("-inf")

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, Poly1) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(self.coeffs))

    def __add__(self, other):
        other = self._lift(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly1(
            [self[i] + other[i] for i in range(n)],
            self.var,
        )

    def __sub__(self, other):
        other = self._lift(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly1([self[i] - other[i] for i in range(n)], self.var)

    def __neg__(self):
        return Poly1([-c for c in self.coeffs], self.var)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            c = Scalar.of(other)
            return Poly1([ci * c for ci in self.coeffs], self.var)
        out = [zero] * (len(self.coeffs) + len(other.coeffs) - 1) if self.coeffs and other.coeffs else []
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly1(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = Poly1.const(1, self.var)
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def __getitem__(self, i: int) -> Scalar:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else zero

    def _lift(self, other) -> "Poly1":
        if isinstance(other, Poly1):
            return other
        return Poly1.const(other, self.var)

    def evaluate(self, value):
        """Horner evaluation; value may be a Scalar or anything with +, *."""
        if not self.coeffs:
            return zero if isinstance(value, Scalar) else 0 * value
        acc = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * value + c
        return acc

    def compose_affine(self, scale: Scalar, offset: Scalar) -> "Poly1":
        """f(scale*X + offset)."""
        arg = Poly1([offset, scale], self.var)
        return self.compose(arg)

    def compose(self, inner: "Poly1") -> "Poly1":
        out = Poly1([], self.var)
        for c in reversed(self.coeffs):
            out = out * inner + Poly1.const(c, self.var)
        return out

    def map_coeffs(self, fn) -> "Poly1":
        return Poly1([fn(c) for c in self.coeffs], self.var)

    def divmod(self, other: "Poly1") -> tuple["Poly1", "Poly1"]:
        if other.is_zero():
            raise ScalarDivisionError("polynomial division by zero")
        q: list[Scalar] = [zero] * max(0, len(self.coeffs) - len(other.coeffs) + 1)
        r = list(self.coeffs)
        dlead = other.coeffs[-1]
        dn = len(other.coeffs)
        while len(r) >= dn:
            c = r[-1] / dlead
            k = len(r) - dn
            q[k] = c
            for i, oc in enumerate(other.coeffs):
                r[k + i] = r[k + i] - c * oc
            while r and r[-1].is_zero():
                r.pop()
        return Poly1(q, self.var), Poly1(r, self.var)

    def monic(self) -> "Poly1":
        if not self.coeffs:
            return self
        lead = self.coeffs[-1]
        return Poly1([c / lead for c in self.coeffs], self.var)

    def text(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for e in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[e]
            if c.is_zero():
                continue
            negative = c.is_negative_term()
            if negative:
                c = -c
            if e == 0:
                mono = ""
            elif e == 1:
                mono = self.var
            else:
                mono = "%s^%d" % (self.var, e)
            ct = c.compact()
            if mono and ct == "1":
                piece = mono
            elif mono:
                piece = "%s*%s" % (ct, mono)
            else:
                piece = ct
            if not parts:
                parts.append("-" + piece if negative else piece)
            else:
                parts.append((" - " if negative else " + ") + piece)
        return "".join(parts)

    def __repr__(self):
        return "Poly1(%s)" % self.text()


def _poly_gcd(f: Poly1, g: Poly1) -> Poly1:
    while g:
        f, g = g, f.divmod(g)[1]
    return f.monic() if f else f


class RatFun1:
    """Rational function in one variable over the Scalar field, reduced."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly1, den: Poly1 | None = None):
        if den is None:
            den = Poly1.const(1, num.var)
        if den.is_zero():
            raise ScalarDivisionError("zero denominator")
        if num.is_zero():
            num, den = Poly1([], num.var), Poly1.const(1, num.var)
        else:
            g = _poly_gcd(num, den)
            if g and g.degree() > 0:
                num = num.divmod(g)[0]
                den = den.divmod(g)[0]
            lead = den.coeffs[-1]
            if not lead.is_one():
                num = num * (one / lead)
                den = den * (one / lead)
        self.num, self.den = num, den

    @staticmethod
    def of(value, var: str = "N") -> "RatFun1":
        if isinstance(value, RatFun1):
            return value
        if isinstance(value, Poly1):
            return RatFun1(value)
        return RatFun1(Poly1.const(value, var))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if not isinstance(other, RatFun1):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __add__(self, other):
        other = RatFun1.of(other, self.num.var)
        return RatFun1(self.num * other.den + other.num * self.den, self.den * other.den)

    def __sub__(self, other):
        other = RatFun1.of(other, self.num.var)
        return RatFun1(self.num * other.den - other.num * self.den, self.den * other.den)

    def __neg__(self):
        return RatFun1(-self.num, self.den)

    def __mul__(self, other):
        other = RatFun1.of(other, self.num.var)
        return RatFun1(self.num * other.num, self.den * other.den)

    def __truediv__(self, other):
        other = RatFun1.of(other, self.num.var)
        if other.is_zero():
            raise ScalarDivisionError("division by zero rational function")
        return RatFun1(self.num * other.den, self.den * other.num)

    def shift_compose(self, scale: Scalar, offset: Scalar) -> "RatFun1":
        """Value at (scale*X + offset) in place of X."""
        return RatFun1(self.num.compose_affine(scale, offset), self.den.compose_affine(scale, offset))

    def text(self) -> str:
        if self.den.degree() == 0 and self.den.coeffs and self.den.coeffs[0].is_one():
            return self.num.text()
        return "(%s)/(%s)" % (self.num.text(), self.den.text())

    def __repr__(self):
        return "RatFun1(%s)" % self.text()
