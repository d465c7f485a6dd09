"""Pre-codewords: distance-2 vertices that an automorphism pulls into the code.

Given a code C with minimum distance >= 3, a codeword alpha, and a
neighbour-set stabilizer y that moves alpha out of C, the pre-codewords
Pre(alpha, y) are the vertices pi at distance 2 from alpha with
apply(y, pi) in C.  Their neighbourhood cells partition the
neighbourhood of alpha into 2-element cells, which forces
|Pre(alpha, y)| = m(q-1)/2, and dually the codewords at distance 2 from a
pre-codeword pi partition the neighbourhood of pi.  verify_pre_structure
checks all of this exhaustively and reports per clause; a failing clause
would falsify the underlying mathematics, so it is expected never to fire.

The hypotheses are checked eagerly with typed errors: the statements are
conditional, and silently proceeding would verify vacuous claims.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .code_model import Code, shell, stabilizes_set
from .errors import (ImageInCodeError, LemmaViolationError, MinDistanceError,
                     NotACodewordError, NotNeighbourStabilizerError,
                     SchemeMismatchError)
from .hamming_core import Vertex, distance, neighbours, vertex_to_text
from .reporting import ClauseResult, all_clauses_pass
from .wreath_group import Automorphism, automorphism_to_text


@dataclass(frozen=True)
class PreReport:
    """Structural verdict for one (code, alpha, y) pre-codeword instance."""

    alpha: Vertex
    y: Automorphism
    pre_set: tuple[Vertex, ...]
    cells: tuple[tuple[Vertex, tuple[Vertex, ...]], ...]
    gamma1_covered: bool
    count_ok: bool
    clauses: tuple[ClauseResult, ...]

    @cached_property
    def all_pass(self) -> bool:
        return all_clauses_pass(self.clauses)

    def to_json(self) -> dict:
        return {
            "alpha": vertex_to_text(self.alpha),
            "y": automorphism_to_text(self.y),
            "pre_set": [vertex_to_text(p) for p in self.pre_set],
            "cells": [{"pi": vertex_to_text(pi),
                       "neighbours": [vertex_to_text(n) for n in cell]}
                      for pi, cell in self.cells],
            "gamma1_covered": self.gamma1_covered,
            "count_ok": self.count_ok,
            "clauses": [c.to_json() for c in self.clauses],
            "all_pass": self.all_pass,
        }


def _check_hypotheses(code: Code, alpha: Vertex, y: Automorphism):
    if alpha.scheme != code.scheme or y.scheme != code.scheme:
        raise SchemeMismatchError("alpha, y and code must share one scheme")
    if code.min_distance < 3:
        raise MinDistanceError(
            f"pre-codewords need minimum distance >= 3, code has {code.min_distance}")
    if alpha not in code:
        raise NotACodewordError(f"{vertex_to_text(alpha)} is not a codeword")
    if not stabilizes_set(code.neighbour_set, y):
        raise NotNeighbourStabilizerError(
            "y does not stabilize the code's neighbour set")
    if y.apply(alpha) in code:
        raise ImageInCodeError(
            f"y maps {vertex_to_text(alpha)} back into the code")


def pre_codewords(code: Code, alpha: Vertex, y: Automorphism) -> tuple[Vertex, ...]:
    """Pre(alpha, y): sorted distance-2 vertices that y maps into the code."""
    _check_hypotheses(code, alpha, y)
    return tuple(pi for pi in shell(alpha, 2) if y.apply(pi) in code)


def pre_for_neighbour(code: Code, alpha: Vertex, y: Automorphism,
                      nu: Vertex) -> Vertex:
    """The unique pre-codeword adjacent to the given neighbour nu of alpha."""
    if distance(alpha, nu) != 1:
        raise ValueError(f"{vertex_to_text(nu)} is not a neighbour of "
                         f"{vertex_to_text(alpha)}")
    candidates = [pi for pi in pre_codewords(code, alpha, y)
                  if distance(nu, pi) == 1]
    if len(candidates) != 1:
        raise LemmaViolationError(
            f"expected exactly one pre-codeword adjacent to {vertex_to_text(nu)}, "
            f"found {len(candidates)}: this falsifies the uniqueness lemma")
    return candidates[0]


def c_of_pi(code: Code, pi: Vertex) -> tuple[Vertex, ...]:
    """Codewords at distance exactly 2 from pi (the dual set of pi)."""
    if pi.scheme != code.scheme:
        raise SchemeMismatchError("pi from a different scheme")
    if code.min_distance < 3:
        raise MinDistanceError("the dual set needs minimum distance >= 3")
    if pi in code:
        raise ValueError(f"{vertex_to_text(pi)} is a codeword")
    return tuple(b for b in shell(pi, 2) if b in code)


def verify_pre_structure(code: Code, alpha: Vertex, y: Automorphism) -> PreReport:
    """Exhaustively check the pre-codeword structure for one (alpha, y) pair.

    Clauses:
      cells_partition_neighbourhood  -- the sets G1(alpha) & G1(pi) are
          pairwise disjoint 2-element cells covering G1(alpha)
      pre_count_half                 -- |Pre| = m(q-1)/2
      pre_neighbours_inside_code_neighbours -- G1(pi) within G1(C) for each pi
      dual_cells_partition           -- for each pi, the sets G1(beta) & G1(pi)
          over beta in C(pi) partition G1(pi) into 2-element cells
      dual_images_outside_code       -- apply(y, beta) not in C for each such beta
    """
    pre = pre_codewords(code, alpha, y)
    scheme = code.scheme
    target = scheme.m * (scheme.q - 1)

    alpha_nbrs = set(neighbours(alpha))
    cells = []
    cell_sizes_ok = True
    seen: set[Vertex] = set()
    disjoint = True
    for pi in pre:
        cell = tuple(sorted(alpha_nbrs & set(neighbours(pi))))
        cells.append((pi, cell))
        if len(cell) != 2:
            cell_sizes_ok = False
        if seen & set(cell):
            disjoint = False
        seen.update(cell)
    covered = seen == alpha_nbrs
    clauses = [ClauseResult(
        "cells_partition_neighbourhood",
        cell_sizes_ok and disjoint and covered,
        f"cells={len(cells)} sizes_ok={cell_sizes_ok} disjoint={disjoint} "
        f"covered={covered}")]

    count_ok = 2 * len(pre) == target
    clauses.append(ClauseResult(
        "pre_count_half", count_ok,
        f"|Pre|={len(pre)}, m(q-1)={target}"))

    gamma1 = set(code.neighbour_set)
    inside = all(set(neighbours(pi)) <= gamma1 for pi in pre)
    clauses.append(ClauseResult(
        "pre_neighbours_inside_code_neighbours", inside,
        f"checked {len(pre)} pre-codewords"))

    dual_ok = True
    images_ok = True
    dual_detail = []
    for pi in pre:
        duals = c_of_pi(code, pi)
        pi_nbrs = set(neighbours(pi))
        seen_pi: set[Vertex] = set()
        ok = 2 * len(duals) == target
        for beta in duals:
            cell = pi_nbrs & set(neighbours(beta))
            if len(cell) != 2 or (seen_pi & cell):
                ok = False
            seen_pi.update(cell)
            if y.apply(beta) in code:
                images_ok = False
        if seen_pi != pi_nbrs:
            ok = False
        if not ok:
            dual_ok = False
            dual_detail.append(vertex_to_text(pi))
    clauses.append(ClauseResult(
        "dual_cells_partition", dual_ok,
        "all pre-codewords" if dual_ok else f"failed at {','.join(dual_detail)}"))
    clauses.append(ClauseResult(
        "dual_images_outside_code", images_ok,
        f"checked duals of {len(pre)} pre-codewords"))

    return PreReport(alpha=alpha, y=y, pre_set=pre, cells=tuple(cells),
                     gamma1_covered=covered, count_ok=count_ok,
                     clauses=tuple(clauses))
