from epsilon_whitehead.free_group.models import AbelianVector, Alphabet, AlphabetMismatchError, Word


def abelianize(w: Word, alphabet: Alphabet) -> AbelianVector:
    if w.max_gen() >= alphabet.rank:
        raise AlphabetMismatchError(f"word uses generators outside rank {alphabet.rank}")
    sums = [0] * alphabet.rank
    for x in w:
        sums[x.gen] += x.sign
    return AbelianVector(tuple(sums))


def homology_primitive(v: AbelianVector) -> bool:
    """Primitive in Z^n iff the entries have gcd 1; the zero vector has gcd 0."""
    return v.gcd() == 1
