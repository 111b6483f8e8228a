"""PBW normal ordering by commutator rewriting.

Words are tuples of generator positions; a word is normal-ordered when its
letters are weakly increasing. An out-of-order pair ``a b`` (``a > b``) is
rewritten to ``b a + [a, b]`` where ``[a, b]`` is an h-series read from the
algebra's commutator table. Results are dicts ``{(j, word): coeff}`` meaning
``sum coeff * h**j * word`` with ``j <= K``.

Memo tables only ever store the unique normal form of a key, so concurrent
readers see the same values as a cache-free evaluation would produce.
"""

import threading

from ..errors import FuelExhausted
from .rational import ONE

DEFAULT_FUEL = 10**6

STRATEGIES = ("leftmost", "rightmost")


def _acc(out, key, value):
    total = out.get(key)
    out[key] = value if total is None else total + value


def _prune(out):
    return {k: v for k, v in out.items() if v}


class NormalOrdering:
    """Normal-ordering engine bound to one algebra's commutator table.

    ``table(i, j, K)`` must return the h-series ``[g_i, g_j]`` for ``i < j``
    as ``{(k, word): coeff}`` in normal form, truncated at ``K``.
    """

    def __init__(self, table, fuel=DEFAULT_FUEL):
        self._table = table
        self.fuel = fuel
        self._swap = {}
        self._word_letter = {}
        self._word_word = {}
        self._by_strategy = {s: {} for s in STRATEGIES}
        self._state = threading.local()

    # -- fuel accounting ------------------------------------------------
    def _enter(self):
        st = self._state
        depth = getattr(st, "depth", 0)
        if depth == 0:
            st.steps = 0
        st.depth = depth + 1

    def _leave(self):
        self._state.depth -= 1

    def _spend(self):
        st = self._state
        st.steps += 1
        if st.steps > self.fuel:
            raise FuelExhausted(
                f"normal ordering exceeded {self.fuel} rewrite steps")

    # -- commutator lookup ----------------------------------------------
    def swap_terms(self, a, b, K):
        """Terms of ``[a, b]`` for ``a > b``, as ``((j, word, coeff), ...)``."""
        key = (a, b, K)
        hit = self._swap.get(key)
        if hit is None:
            entry = self._table(b, a, K)
            hit = tuple((j, w, -c) for (j, w), c in sorted(entry.items()))
            self._swap[key] = hit
        return hit

    # -- fast path: leftmost rewriting, memoized by (ordered word, letter) --
    def mul_word_letter(self, u, x, K):
        if not u or u[-1] <= x:
            return {(0, u + (x,)): ONE}
        key = (u, x, K)
        hit = self._word_letter.get(key)
        if hit is not None:
            return hit
        self._enter()
        try:
            self._spend()
            a, p = u[-1], u[:-1]
            out = {}
            for (j, w), c in self.mul_word_letter(p, x, K).items():
                for (j2, w2), c2 in self.mul_word_letter(w, a, K - j).items():
                    _acc(out, (j + j2, w2), c * c2)
            for j, m, c in self.swap_terms(a, x, K):
                for (j2, w2), c2 in self.mul_words(p, m, K - j).items():
                    _acc(out, (j + j2, w2), c * c2)
            out = _prune(out)
        finally:
            self._leave()
        self._word_letter[key] = out
        return out

    def mul_words(self, u, v, K):
        """Normal form of the product of two normal-ordered words."""
        if not v:
            return {(0, u): ONE}
        if not u or u[-1] <= v[0]:
            return {(0, u + v): ONE}
        key = (u, v, K)
        hit = self._word_word.get(key)
        if hit is not None:
            return hit
        self._enter()
        try:
            cur = {(0, u): ONE}
            for x in v:
                nxt = {}
                for (j, w), c in cur.items():
                    for (j2, w2), c2 in self.mul_word_letter(w, x, K - j).items():
                        _acc(nxt, (j + j2, w2), c * c2)
                cur = _prune(nxt)
        finally:
            self._leave()
        self._word_word[key] = cur
        return cur

    def order_word(self, word, K):
        """Normal form of an arbitrary word via the fast path."""
        self._enter()
        try:
            cur = {(0, ()): ONE}
            for x in word:
                nxt = {}
                for (j, w), c in cur.items():
                    for (j2, w2), c2 in self.mul_word_letter(w, x, K - j).items():
                        _acc(nxt, (j + j2, w2), c * c2)
                cur = _prune(nxt)
        finally:
            self._leave()
        return cur

    # -- generic rewriting with an explicit redex-selection strategy -------
    def rewrite_word(self, word, K, strategy="leftmost"):
        """Normal form of ``word`` rewriting the leftmost or rightmost
        out-of-order adjacent pair first. Used for confluence checks."""
        if strategy not in STRATEGIES:
            raise ValueError(f"unknown strategy {strategy!r}")
        self._enter()
        try:
            return self._rewrite(tuple(word), K, strategy)
        finally:
            self._leave()

    def _rewrite(self, word, K, strategy):
        memo = self._by_strategy[strategy]
        key = (word, K)
        hit = memo.get(key)
        if hit is not None:
            return hit
        descents = [i for i in range(len(word) - 1) if word[i] > word[i + 1]]
        if not descents:
            out = {(0, word): ONE}
        else:
            self._spend()
            i = descents[0] if strategy == "leftmost" else descents[-1]
            a, b = word[i], word[i + 1]
            head, tail = word[:i], word[i + 2:]
            out = dict(self._rewrite(head + (b, a) + tail, K, strategy))
            for j, m, c in self.swap_terms(a, b, K):
                for (j2, w2), c2 in self._rewrite(head + m + tail, K - j,
                                                  strategy).items():
                    _acc(out, (j + j2, w2), c * c2)
            out = _prune(out)
        memo[key] = out
        return out
