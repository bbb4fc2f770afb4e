"""Exhaustive cyclic-length scans over the type II Whitehead automorphisms of one word.

Fix a multiplier letter a. The letters of a cyclic word w off a's generator split it into
stretches x a^m y, and an automorphism with support A sends such a stretch to
x a^(m - [x^-1 in A] + [y in A]) y without cancelling x against y. So the image has cyclic
length r + sum |m - [x^-1 in A] + [y in A]| over the r stretches. scan_whitehead walks the
supports of each multiplier in Gray-code order and updates only the stretches touching the
flipped letter. measure_whitehead applies and measures every automorphism and is the
reference the fast scan is checked against.
"""

from epsilon_whitehead.config import WhiteheadConfig
from epsilon_whitehead.decision.models import WhiteheadScan
from epsilon_whitehead.free_group.automorphisms import (
    apply_table,
    check_rank_guard,
    enumerate_whitehead_auts,
)
from epsilon_whitehead.free_group.models import Alphabet, AlphabetMismatchError, CyclicWord
from epsilon_whitehead.free_group.reduction import cyclic_length

Stretch = tuple[int, int, int]


def _stretches(codes: list[int], a: int) -> list[Stretch]:
    """(index of x^-1, index of y, m) for every stretch x a^m y, cyclically."""
    n = len(codes)
    positions = [i for i, x in enumerate(codes) if x >> 1 != a >> 1]
    stretches: list[Stretch] = []
    for j, p in enumerate(positions):
        q = positions[(j + 1) % len(positions)]
        gap = (q - p - 1) % n
        m = 0
        if gap:
            m = gap if codes[(p + 1) % n] == a else -gap
        stretches.append((codes[p] ^ 1, codes[q], m))
    return stretches


def _scan_multiplier(codes: list[int], a: int, rank: int) -> tuple[int, int]:
    length = len(codes)
    others = [z for z in range(2 * rank) if z >> 1 != a >> 1]
    if not others:
        return length, 0

    stretches = _stretches(codes, a)
    touched: dict[int, list[int]] = {}
    for s, (x_inv, y, _) in enumerate(stretches):
        touched.setdefault(x_inv, []).append(s)
        touched.setdefault(y, []).append(s)

    relevant = [i for i, z in enumerate(others) if z in touched]
    best_length, best_mask = -1, 0
    idle = [i for i, z in enumerate(others) if z not in touched]
    if idle:
        # Letters outside every stretch leave the length alone.
        best_length, best_mask = length, 1 << idle[0]

    terms = [abs(m) for _, _, m in stretches]
    total = len(stretches) + sum(terms)
    bits = [0] * (2 * rank)
    mask = 0
    for step in range(1, 1 << len(relevant)):
        i = relevant[(step & -step).bit_length() - 1]
        mask ^= 1 << i
        z = others[i]
        bits[z] ^= 1
        for s in touched[z]:
            x_inv, y, m = stretches[s]
            term = abs(m - bits[x_inv] + bits[y])
            total += term - terms[s]
            terms[s] = term
        if best_length < 0 or total < best_length or (total == best_length and mask < best_mask):
            best_length, best_mask = total, mask
    return best_length, best_mask


def scan_whitehead(
    c: CyclicWord,
    alphabet: Alphabet,
    config: WhiteheadConfig | None = None,
) -> WhiteheadScan:
    """Least image cyclic length per multiplier, without building any automorphism.

    Raises:
        RankGuardExceededError: if the rank is above the configured guard
        AlphabetMismatchError: if the word uses generators outside the alphabet
    """
    check_rank_guard(alphabet, config)
    rank = alphabet.rank
    if c.as_word().max_gen() >= rank:
        raise AlphabetMismatchError(f"word uses generators outside rank {rank}")
    if len(c) <= 1:
        return WhiteheadScan(
            word=c, rank=rank, lengths=(len(c),) * (2 * rank), masks=(0,) * (2 * rank)
        )
    codes = [x.index for x in c.letters]
    results = [_scan_multiplier(codes, a, rank) for a in range(2 * rank)]
    return WhiteheadScan(
        word=c,
        rank=rank,
        lengths=tuple(length for length, _ in results),
        masks=tuple(mask for _, mask in results),
    )


def measure_whitehead(
    c: CyclicWord,
    alphabet: Alphabet,
    config: WhiteheadConfig | None = None,
) -> WhiteheadScan:
    """Same result as scan_whitehead by applying and measuring every automorphism.

    Raises:
        RankGuardExceededError: if the rank is above the configured guard
    """
    rank = alphabet.rank
    best: dict[int, tuple[int, int]] = {}
    candidates = enumerate_whitehead_auts(alphabet, config)
    if len(c) <= 1:
        candidates = iter(())
    for aut in candidates:
        key = aut.multiplier.index
        length = cyclic_length(apply_table(aut.image_table(), c.letters))
        if key not in best or length < best[key][0]:
            best[key] = (length, aut.mask)
    results = [best.get(a, (len(c), 0)) for a in range(2 * rank)]
    return WhiteheadScan(
        word=c,
        rank=rank,
        lengths=tuple(length for length, _ in results),
        masks=tuple(mask for _, mask in results),
    )
