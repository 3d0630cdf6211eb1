"""Pure-Python branch and bound for minimum hitting sets."""

from __future__ import annotations

from typing import List, Optional, Tuple


def _popcount(m: int) -> int:
    return bin(m).count("1")


class _Budget(Exception):
    pass


def solve(masks: List[int], n: int, upper: int, budget: int
          ) -> Tuple[Optional[int], int, bool]:
    """Smallest set of indices (< ``n``) meeting every mask, if one of size
    below ``upper`` exists.

    Returns ``(solution_mask or None, nodes, completed)``.  Branching picks
    the unmet mask with fewest allowed indices, tries them in ascending
    order and forbids each after its subtree is done.  A greedy packing of
    pairwise-disjoint unmet masks gives the lower bound.
    """
    best = [upper, None]
    nodes = [0]
    full = (1 << n) - 1

    def rec(chosen: int, excluded: int, size: int) -> None:
        nodes[0] += 1
        if nodes[0] > budget:
            raise _Budget
        allowed = full & ~excluded
        pick = -1
        pick_cnt = n + 1
        open_sets = []
        for m in masks:
            if m & chosen:
                continue
            avail = m & allowed
            if not avail:
                return
            c = _popcount(avail)
            if c < pick_cnt:
                pick, pick_cnt = avail, c
            open_sets.append(avail)
        if pick < 0:
            if size < best[0]:
                best[0], best[1] = size, chosen
            return
        lb = 0
        used = 0
        for a in open_sets:
            if not a & used:
                used |= a
                lb += 1
        if size + lb >= best[0]:
            return
        rest = pick
        while rest:
            low = rest & -rest
            rest ^= low
            rec(chosen | low, excluded, size + 1)
            excluded |= low
            if size + 1 >= best[0]:
                return

    try:
        rec(0, 0, 0)
        done = True
    except _Budget:
        done = False
    return best[1], min(nodes[0], budget), done
