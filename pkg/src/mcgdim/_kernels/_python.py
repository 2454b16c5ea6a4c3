"""Pure-Python reference implementation of the hot kernels.

Every function here has a twin with the same signature in ``_native.pyx``.
Group tables are passed flattened: ``table[i * n + j]`` is the index of ``i * j``.
"""

from __future__ import annotations

from typing import Sequence


def bounded_multisets(
    weights: Sequence[int], budget: int, max_len: int = -1
) -> list[tuple[tuple[int, ...], int]]:
    """All non-decreasing index tuples whose total weight is at most ``budget``.

    ``weights`` must be positive and sorted ascending; the empty tuple is included.
    """
    out: list[tuple[tuple[int, ...], int]] = []
    k = len(weights)
    stack: list[int] = []

    def dfs(start: int, total: int) -> None:
        out.append((tuple(stack), total))
        if len(stack) == max_len:
            return
        for i in range(start, k):
            t = total + weights[i]
            if t > budget:
                break
            stack.append(i)
            dfs(i, t)
            stack.pop()

    dfs(0, 0)
    return out


def _is_dihedral_min(word: list[int]) -> bool:
    n = len(word)
    rev = word[::-1]
    for s in range(n):
        for w in (word, rev):
            for i in range(n):
                a = w[(s + i) % n]
                b = word[i]
                if a != b:
                    if a < b:
                        return False
                    break
    return True


def dihedral_words(
    weights: Sequence[int], budget: int
) -> list[tuple[tuple[int, ...], int]]:
    """Non-empty cyclic words up to rotation and reflection, total weight <= budget.

    Each word is returned in its lexicographically least dihedral form.
    """
    out: list[tuple[tuple[int, ...], int]] = []
    k = len(weights)
    word: list[int] = []

    def dfs(total: int) -> None:
        if word and _is_dihedral_min(word):
            out.append((tuple(word), total))
        lo = word[0] if word else 0
        for i in range(lo, k):
            t = total + weights[i]
            if t > budget:
                break
            word.append(i)
            dfs(t)
            word.pop()

    dfs(0)
    return out


def subgroup_closure(table: Sequence[int], n: int, gens: Sequence[int]) -> int:
    """Bitmask of the subgroup generated by ``gens``; element 0 is the identity."""
    mask = 1
    elems = [0]
    for e in elems:
        row = e * n
        for s in gens:
            p = table[row + s]
            if not (mask >> p) & 1:
                mask |= 1 << p
                elems.append(p)
    return mask


def _members(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def all_subgroups(table: Sequence[int], n: int) -> list[int]:
    """Every subgroup as a bitmask, sorted by (order, mask).

    Saturates from the trivial subgroup by adjoining one right coset
    representative at a time; ``<H, hx> = <H, x>`` so one closure per coset suffices.
    """
    gens_of: dict[int, list[int]] = {1: []}
    queue = [1]
    for h in queue:
        gens = gens_of[h]
        members = _members(h)
        done = h
        for x in range(n):
            if (done >> x) & 1:
                continue
            for m in members:
                done |= 1 << table[m * n + x]
            k = subgroup_closure(table, n, gens + [x])
            if k not in gens_of:
                gens_of[k] = gens + [x]
                queue.append(k)
    return sorted(gens_of, key=lambda m: (bin(m).count("1"), m))
