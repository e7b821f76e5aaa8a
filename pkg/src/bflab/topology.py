"""Finite topological spaces given by explicit enumerated bases.

A space is a finite point set together with an ordered list of basic open
sets.  Opens are unions of basic sets; everything (closure, interior,
category notions) is computed by direct enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable, Iterable

from .errors import DomainError

PointSet = frozenset


@dataclass(frozen=True)
class FinTopSpace:
    """A finite space with an enumerated basis.

    ``basis[n]`` is the n-th basic open set; the index is stable and is the
    unit other modules refer to.  The basis must cover the points and
    satisfy the refinement axiom: any point in an intersection of two basic
    sets lies in a basic set contained in that intersection.
    """

    points: tuple
    basis: tuple

    @staticmethod
    def build(points: Iterable[Hashable], basis: Iterable[Iterable[Hashable]]) -> "FinTopSpace":
        pts = tuple(points)
        if len(set(pts)) != len(pts):
            raise DomainError("duplicate point identifiers")
        bas = tuple(frozenset(b) for b in basis)
        space = FinTopSpace(pts, bas)
        space._validate()
        return space

    def _validate(self) -> None:
        pset = frozenset(self.points)
        for i, b in enumerate(self.basis):
            if not b <= pset:
                raise DomainError(f"basis set {i} contains unknown points {sorted(map(str, b - pset))}")
        covered = frozenset().union(*self.basis) if self.basis else frozenset()
        if covered != pset:
            raise DomainError("basis does not cover the point set")
        for i, bi in enumerate(self.basis):
            for j, bj in enumerate(self.basis):
                inter = bi & bj
                for p in inter:
                    if not any(p in bk and bk <= inter for bk in self.basis):
                        raise DomainError(
                            f"basis axiom fails at point {p!r} for basis sets {i} and {j}"
                        )

    @property
    def point_set(self) -> PointSet:
        return frozenset(self.points)

    def check_subset(self, A: Iterable[Hashable]) -> PointSet:
        A = frozenset(A)
        if not A <= self.point_set:
            raise DomainError(f"points {sorted(map(str, A - self.point_set))} are not in the space")
        return A

    def is_open(self, H: Iterable[Hashable]) -> bool:
        H = self.check_subset(H)
        inside = [b for b in self.basis if b <= H]
        union = frozenset().union(*inside) if inside else frozenset()
        return union == H

    def interior(self, A: Iterable[Hashable]) -> PointSet:
        A = self.check_subset(A)
        inside = [b for b in self.basis if b <= A]
        return frozenset().union(*inside) if inside else frozenset()


def closure(space: FinTopSpace, A: Iterable[Hashable]) -> PointSet:
    """Points whose every basic neighbourhood meets ``A``."""
    A = space.check_subset(A)
    if not A:
        return frozenset()
    out = set()
    for p in space.points:
        if all((A & b) for b in space.basis if p in b):
            out.add(p)
    return frozenset(out)


def _nowhere_dense_singleton(space: FinTopSpace, s: Hashable, H: PointSet) -> bool:
    # {s} is nowhere dense in the subspace H iff the relative interior of
    # its relative closure is empty.  Relative closure of {s} is cl({s}) & H;
    # a nonempty relative interior means some basic b with b & H nonempty and
    # contained in that closure.
    rel_cl = closure(space, {s}) & H
    for b in space.basis:
        bh = b & H
        if bh and bh <= rel_cl:
            return False
    return True


def meager_in(space: FinTopSpace, S: Iterable[Hashable], H: Iterable[Hashable]) -> bool:
    """Is ``S`` meager in the open subspace ``H``?

    A finite set is a finite union of its singletons, singletons of a meager
    set are nowhere dense (subsets of nowhere-dense sets are nowhere dense),
    and a finite union of nowhere-dense sets is meager.  So S is meager in H
    exactly when every singleton {s}, s in S, is nowhere dense in H, which
    is what we enumerate.
    """
    S = space.check_subset(S)
    H = space.check_subset(H)
    if not space.is_open(H):
        raise DomainError("H is not open (not a union of basis sets)")
    if not S <= H:
        raise DomainError("S must be a subset of H")
    return all(_nowhere_dense_singleton(space, s, H) for s in S)


def comeagre_in(space: FinTopSpace, S: Iterable[Hashable], H: Iterable[Hashable]) -> bool:
    """Is ``S`` comeagre in the open subspace ``H``?"""
    S = space.check_subset(S)
    H = space.check_subset(H)
    if not space.is_open(H):
        raise DomainError("H is not open (not a union of basis sets)")
    return meager_in(space, H - S, H)


def basis_meet_witnesses(space: FinTopSpace, k: int, l: int) -> list[int]:
    """All basis indices m with basis[m] contained in basis[k] & basis[l].

    By the basis axiom the union of the returned sets equals the
    intersection itself.
    """
    nb = len(space.basis)
    if not (0 <= k < nb and 0 <= l < nb):
        raise DomainError(f"basis index out of range (have {nb} basis sets)")
    inter = space.basis[k] & space.basis[l]
    out = [m for m, b in enumerate(space.basis) if b <= inter]
    if __debug__:
        union = frozenset().union(*(space.basis[m] for m in out)) if out else frozenset()
        assert union == inter, "basis axiom violated: witnesses do not cover the meet"
    return out


def is_discrete(space: FinTopSpace) -> bool:
    return all(any(b == frozenset({p}) for b in space.basis) for p in space.points)
