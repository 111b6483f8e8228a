"""The copy basis of so(4): J = J_1 + J_2 and N = J_1 - J_2, where copy 1
is U_h(sl(2)) and copy 2 is U_{-h}(sl(2)). Mapping the copy algebra's tables
through this change of basis must reproduce the so(4) tables exactly."""

from ..kernel.rational import Rational
from ..tensor import antipode, coproduct, map_generators

HALF = Rational(1, 2)


def pair_images(target, K):
    """Images J_1 = (J + N)/2 and J_2 = (J - N)/2 of the copy generators in
    ``target`` (names Jp/Np/..., with an optional ``_hat`` suffix)."""
    suffix = "_hat" if "Jp_hat" in target.generators else ""
    g = target.at(K)
    images = {}
    for tag in ("p", "m", "3"):
        J, N = getattr(g, "J" + tag + suffix), getattr(g, "N" + tag + suffix)
        images[f"J1{tag}"] = (J + N) * HALF
        images[f"J2{tag}"] = (J - N) * HALF
    return images


def basis_differences(pair, target, K):
    """Entries where the mapped copy tables disagree with ``target``."""
    images = pair_images(target, K)

    def image(x):
        return map_generators(x, target, images)

    diffs = []
    for a, b in pair.pairs():
        ia, ib = images[a], images[b]
        if image(pair.commutator(a, b, K)) != ia * ib - ib * ia:
            diffs.append(f"[{a},{b}]")
    for a in pair.generators:
        if image(pair.coproduct(a, K)) != coproduct(images[a]):
            diffs.append(f"Delta({a})")
        if image(pair.antipode(a, K)) != antipode(images[a]):
            diffs.append(f"S({a})")
    return diffs


def so4_self_check(K=2):
    from .catalog import sl2h_pair, so4h
    return basis_differences(sl2h_pair(), so4h(), K)
