"""Independent oracles for the engine tests.

The naive reducer below rewrites free words letter by letter, with a
selectable reduction position (leftmost or rightmost reducible pair).  It
shares no code with the engine's memoized recurrences, so agreement between
the two is meaningful evidence, and agreement between the two reduction
orders is the confluence check.
"""

from fractions import Fraction

from qweyl.scalar import one, zero

_RANK = {"b": 0, "N": 1, "a": 2}


def _reducible(word):
    """Indices of adjacent out-of-order pairs."""
    return [t for t in range(len(word) - 1) if _RANK[word[t]] > _RANK[word[t + 1]]]


def _rewrite_pair(word, t, rel):
    """Replace the pair at position t by the relation's right-hand side.

    Yields (new_word, scalar_factor) pairs.
    """
    left, pair, right = word[:t], word[t : t + 2], word[t + 2 :]
    if pair == ("a", "b"):
        yield left + ("b", "a") + right, rel.sigma
        if rel.has_N:
            for m, c in enumerate(rel.F.coeffs):
                if c:
                    yield left + ("N",) * m + right, c
        else:
            if rel.rho:
                yield left + right, rel.rho
    elif pair == ("a", "N"):
        # a N = tau * N a + a
        yield left + ("N", "a") + right, rel.tau
        yield left + ("a",) + right, one
    elif pair == ("N", "b"):
        # N b = tau * b N + b
        yield left + ("b", "N") + right, rel.tau
        yield left + ("b",) + right, one
    else:  # pragma: no cover - guarded by _reducible
        raise AssertionError(pair)


def reduce_word(word, rel, order="left"):
    """Fully normal-order a word by repeated single-pair rewriting.

    Returns a dict mapping (i, m, j) to Scalar, comparable with the engine's
    term map.
    """
    element = {tuple(word): one}
    while True:
        again = {}
        done = {}
        for w, c in element.items():
            spots = _reducible(w)
            if not spots:
                done[w] = done.get(w, zero) + c
                continue
            t = spots[0] if order == "left" else spots[-1]
            for nw, factor in _rewrite_pair(w, t, rel):
                again[nw] = again.get(nw, zero) + c * factor
        if not again:
            break
        for w, c in done.items():
            again[w] = again.get(w, zero) + c
        element = {w: c for w, c in again.items() if c}
    out = {}
    for w, c in element.items():
        if not c:
            continue
        key = (w.count("b"), w.count("N"), w.count("a"))
        out[key] = out.get(key, zero) + c
    return {k: v for k, v in out.items() if v}


def nf_terms(nf):
    """The engine normal form as a plain {(i, m, j): Scalar} dict."""
    return {mono: c for mono, c in nf.items()}


def random_word(rng, length, letters="ab"):
    return "".join(rng.choice(letters) for _ in range(length))


def random_rational(rng, lo=-6, hi=6):
    num = rng.randint(lo, hi)
    den = rng.randint(1, 6)
    if num == 0:
        num = 1
    return Fraction(num, den)
