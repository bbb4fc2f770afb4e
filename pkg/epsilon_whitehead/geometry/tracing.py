from epsilon_whitehead.free_group.models import Alphabet, Letter, Word
from epsilon_whitehead.free_group.reduction import free_reduce
from epsilon_whitehead.geometry.models import InvalidLoopError, InvalidTreeError, PLLoop, SpanningTree


def trace_word(loop: PLLoop, tree: SpanningTree, alphabet: Alphabet) -> Word:
    """Read the fundamental-group word of a based loop off a spanning tree.

    Tree edges contribute nothing; a non-tree edge contributes its generator, inverted when
    traversed against the label's orientation.
    """
    if tree.graph != loop.graph:
        raise InvalidTreeError("tree and loop live on different graphs")
    if loop.start != tree.root:
        raise InvalidLoopError(f"loop starts at {loop.start}, tree is rooted at {tree.root}")

    letters: list[Letter] = []
    for step in loop.steps:
        label = tree.labels.get(step.edge)
        if label is None:
            continue
        name, orientation = label
        letters.append(alphabet.letter(name, orientation * step.direction))
    return free_reduce(letters)
