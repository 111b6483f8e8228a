"""Deterministic text and LaTeX rendering of series.

The text form is valid input for :func:`jordanian.cli.parser.parse`.
"""

import re

from .rational import rat

_LATEX_SUFFIX = {"p": "+", "m": "-", "3": "3"}


def _word_text(names, word):
    if not word:
        return "1"
    parts = []
    i = 0
    while i < len(word):
        j = i
        while j < len(word) and word[j] == word[i]:
            j += 1
        n = j - i
        parts.append(names[word[i]] + (f"^{n}" if n > 1 else ""))
        i = j
    return "*".join(parts)


def _coeff_text(c):
    q = rat(c)
    if q.denominator == 1:
        return str(int(q.numerator))
    return f"{int(q.numerator)}/{int(q.denominator)}"


def term_text(names, k, words, c):
    mag = abs(rat(c))
    factors = []
    if mag != 1:
        factors.append(_coeff_text(mag))
    if k == 1:
        factors.append("h")
    elif k > 1:
        factors.append(f"h^{k}")
    first = words[0]
    if first or not factors:
        factors.append(_word_text(names, first))
    slots = ["*".join(factors)] + [_word_text(names, w) for w in words[1:]]
    return " ox ".join(slots)


def format_series(s):
    names = s.algebra.generators
    out = []
    for (k, words), c in s.sorted_terms():
        body = term_text(names, k, words, c)
        if not out:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out) if out else "0"


def latex_generator(name):
    """``Jp`` -> ``J^{+}``; ``N3_hat`` -> ``\\hat N^{3}``; ``J1p`` -> ``J^{+}_{1}``."""
    hat = name.endswith("_hat")
    base = name[:-4] if hat else name
    m = re.fullmatch(r"([A-Z])(\d?)([pm3])", base)
    if not m:
        return name
    letter, copy, kind = m.groups()
    tex = f"{letter}^{{{_LATEX_SUFFIX[kind]}}}"
    if copy:
        tex += f"_{{{copy}}}"
    return ("\\hat " + tex) if hat else tex


def _word_latex(names, word):
    if not word:
        return "1"
    parts = []
    i = 0
    while i < len(word):
        j = i
        while j < len(word) and word[j] == word[i]:
            j += 1
        g = latex_generator(names[word[i]])
        parts.append(f"({g})^{{{j - i}}}" if j - i > 1 else g)
        i = j
    return " ".join(parts)


def format_latex(s, parameter="h"):
    names = s.algebra.generators
    out = []
    for (k, words), c in s.sorted_terms():
        q = abs(rat(c))
        coeff = "" if q == 1 else (
            str(int(q.numerator)) if q.denominator == 1
            else f"\\frac{{{int(q.numerator)}}}{{{int(q.denominator)}}}")
        hpart = "" if k == 0 else (parameter if k == 1 else f"{parameter}^{{{k}}}")
        slots = [_word_latex(names, w) for w in words]
        if slots[0] == "1" and (coeff or hpart) and len(slots) == 1:
            slots[0] = ""
        body = " ".join(x for x in (coeff, hpart) if x)
        body = (body + " " + " \\otimes ".join(slots)).strip() or "1"
        if not out:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append(("- " if c < 0 else "+ ") + body)
    return " ".join(out) if out else "0"
