"""Tensor square and cube of an algebra: products, flip, leg embeddings and
the Hopf maps extended to elements.

Tensor elements are ``HSeries`` with ``legs`` 2 or 3; slots are independent
factors, each normal-ordered in the same algebra.
"""

from .errors import LegMismatch
from .kernel.rational import ONE, ZERO
from .kernel.series import HSeries

TensorSeries = HSeries

LEG_EMBEDDINGS = {"12": (0, 1), "13": (0, 2), "23": (1, 2)}


def tmul(a, b):
    return a * b


def permute(a, perm):
    """Reorder legs: slot ``i`` of the result is slot ``perm[i]`` of ``a``."""
    if sorted(perm) != list(range(a.legs)):
        raise LegMismatch(f"{perm} is not a permutation of {a.legs} legs")
    return a._like({(k, tuple(ws[p] for p in perm)): c
                    for (k, ws), c in a.terms.items()})


def flip(a):
    """sigma(x ⊗ y) = y ⊗ x."""
    if a.legs != 2:
        raise LegMismatch("flip acts on the tensor square")
    return permute(a, (1, 0))


def embed(a, legs):
    """Leg notation: ``embed(R, "13")`` is R_13 = sum r ⊗ 1 ⊗ r'."""
    if a.legs != 2:
        raise LegMismatch("embed takes a tensor-square element")
    try:
        i, j = LEG_EMBEDDINGS[legs]
    except KeyError:
        raise ValueError(f"unknown leg pair {legs!r}; use one of "
                         f"{sorted(LEG_EMBEDDINGS)}") from None
    out = {}
    for (k, (w1, w2)), c in a.terms.items():
        slots = [(), (), ()]
        slots[i], slots[j] = w1, w2
        out[(k, tuple(slots))] = c
    return a._like(out, legs=3)


def _word_coproduct(alg, word, K):
    def compute():
        if not word:
            return HSeries.one(alg, K, legs=2)
        head = _word_coproduct(alg, word[:-1], K)
        return head * alg.coproduct(word[-1], K)
    return alg._cached(("delta-word", word, K), compute)


def _word_antipode(alg, word, K):
    def compute():
        if not word:
            return HSeries.one(alg, K)
        # anti-homomorphism: S(uv) = S(v) S(u)
        return alg.antipode(word[-1], K) * _word_antipode(alg, word[:-1], K)
    return alg._cached(("gamma-word", word, K), compute)


def _word_counit(alg, word):
    c = ONE
    for x in word:
        c *= alg.counit(x)
        if not c:
            return ZERO
    return c


def _apply_slot(a, slot, image, out_legs):
    """Replace ``slot`` of every term by the series ``image(word, K - k)``
    and reassemble; the h-powers add."""
    K = a.order
    out = {}
    for (k, ws), c in a.terms.items():
        img = image(ws[slot], K - k)
        for (j, vs), c2 in img.terms.items():
            if k + j > K:
                continue
            key = (k + j, ws[:slot] + vs + ws[slot + 1:])
            total = out.get(key)
            out[key] = c * c2 if total is None else total + c * c2
    return a._like(out, legs=out_legs)


def coproduct(x):
    """The coproduct of an algebra element (an algebra homomorphism)."""
    if x.legs != 1:
        raise LegMismatch("coproduct takes a single-leg element")
    alg = x.algebra
    return _apply_slot(x, 0, lambda w, K: _word_coproduct(alg, w, K), 2)


def flipped_coproduct(x):
    """Delta' = sigma o Delta."""
    return flip(coproduct(x))


def extend_delta(side, a):
    """``(Delta ⊗ id) a`` for side "left", ``(id ⊗ Delta) a`` for "right"."""
    if a.legs != 2:
        raise LegMismatch("extend_delta takes a tensor-square element")
    slot = {"left": 0, "right": 1}[side]
    alg = a.algebra
    return _apply_slot(a, slot, lambda w, K: _word_coproduct(alg, w, K), 3)


def antipode(x):
    if x.legs != 1:
        raise LegMismatch("antipode takes a single-leg element")
    alg = x.algebra
    return _apply_slot(x, 0, lambda w, K: _word_antipode(alg, w, K), 1)


def apply_antipode_leg(a, slot):
    alg = a.algebra
    return _apply_slot(a, slot, lambda w, K: _word_antipode(alg, w, K), a.legs)


def apply_counit_leg(a, slot):
    """Contract one leg with the counit."""
    alg = a.algebra
    out = {}
    for (k, ws), c in a.terms.items():
        e = _word_counit(alg, ws[slot])
        if e:
            key = (k, ws[:slot] + ws[slot + 1:])
            out[key] = out.get(key, ZERO) + c * e
    return a._like(out, legs=a.legs - 1)


def multiply_legs(a):
    """m: A ⊗ A -> A."""
    if a.legs != 2:
        raise LegMismatch("multiplication map takes a tensor-square element")
    alg, K = a.algebra, a.order
    terms = {}
    for (k, (w1, w2)), c in a.terms.items():
        for (j, w), c2 in alg.engine.mul_words(w1, w2, K - k).items():
            key = (k + j, (w,))
            terms[key] = terms.get(key, ZERO) + c * c2
    return a._like(terms, legs=1)


def map_generators(x, target, images):
    """Apply the algebra homomorphism sending generator ``g`` to
    ``images[g]`` (single-leg series in ``target`` at ``x.order``) slotwise."""
    K = x.order
    memo = {}

    def word_image(w, budget):
        key = (w, budget)
        hit = memo.get(key)
        if hit is None:
            if not w:
                hit = HSeries.one(target, budget)
            else:
                hit = word_image(w[:-1], budget) * images[
                    x.algebra.generators[w[-1]]].truncate(budget)
            memo[key] = hit
        return hit

    out = {}
    for (k, ws), c in x.terms.items():
        partial = [(k, (), c)]
        for w in ws:
            img = word_image(w, K - k)
            nxt = []
            for kk, pre, cc in partial:
                for (j, (v,)), c2 in img.terms.items():
                    if kk + j <= K:
                        nxt.append((kk + j, pre + (v,), cc * c2))
            partial = nxt
        for kk, vs, cc in partial:
            out[(kk, vs)] = out.get((kk, vs), ZERO) + cc
    return HSeries(target, K, out, x.legs)
