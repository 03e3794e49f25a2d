"""Deutsch's involution on Dyck paths and the first-return decomposition."""

from narayana.constants import DOWN, UP
from narayana.errors import EmptyPathError
from narayana.models import DyckPath


def split_word(word: str) -> tuple[str, str]:
    """Split a nonempty Dyck word U P1 D P2 at its first return; returns (P1, P2)."""
    height = 0
    for index, char in enumerate(word):
        height += 1 if char == UP else -1
        if height == 0:
            return word[1:index], word[index + 1 :]
    raise EmptyPathError("The empty path has no first return")


def first_return_split(p: DyckPath) -> tuple[DyckPath, DyckPath]:
    """
    First-return decomposition p = U P1 D P2.

    Raises EmptyPathError on the empty path.
    """
    first, rest = split_word(p.word)
    return DyckPath.model_construct(word=first), DyckPath.model_construct(word=rest)


def join_first_return(first: DyckPath, rest: DyckPath) -> DyckPath:
    """Inverse of first_return_split."""
    return DyckPath.model_construct(word=UP + first.word + DOWN + rest.word)


def phi_word(word: str) -> str:
    """phi(e) = e, phi(U P1 D P2) = U phi(P2) D phi(P1), with an explicit stack."""
    out: list[str] = []
    # (is_literal, text): literals are emitted, words are expanded.
    stack: list[tuple[bool, str]] = [(False, word)]
    while stack:
        is_literal, text = stack.pop()
        if is_literal:
            out.append(text)
        elif text:
            first, rest = split_word(text)
            stack.append((False, first))
            stack.append((True, DOWN))
            stack.append((False, rest))
            stack.append((True, UP))
    return "".join(out)


def phi(p: DyckPath) -> DyckPath:
    """Deutsch's involution: returns become initial ascent, j peaks become n+1-j peaks."""
    return DyckPath.model_construct(word=phi_word(p.word))
