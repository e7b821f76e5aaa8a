"""Finite groups acting by homeomorphisms on finite spaces.

Houses translates, Vaught *-transforms, invariance, and the index relations
that make a point, a group and an action reconstructible from pure
combinatorial data.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Hashable, Iterable

from . import topology
from .errors import DomainError, VerificationError
from .topology import FinTopSpace, PointSet, closure, comeagre_in


@dataclass(frozen=True)
class FinGroup:
    """A finite group with multiplication/inverse tables and a basis.

    ``elements[0]`` is the identity.  ``gbasis`` is an ordered list of
    element subsets; ``gbasis[0]`` is the whole group, all basis sets are
    nonempty, and together they form a topological basis on the elements.
    The group doubles as a :class:`FinTopSpace` via :attr:`space`.
    """

    elements: tuple
    mult: dict
    inv: dict
    gbasis: tuple

    @staticmethod
    def build(elements, mult, inv, gbasis) -> "FinGroup":
        g = FinGroup(tuple(elements), dict(mult), dict(inv), tuple(frozenset(b) for b in gbasis))
        g._validate()
        return g

    def _validate(self) -> None:
        els = self.elements
        eset = set(els)
        if len(eset) != len(els):
            raise DomainError("duplicate group elements")
        e = els[0]
        for a in els:
            for b in els:
                if (a, b) not in self.mult or self.mult[(a, b)] not in eset:
                    raise DomainError(f"multiplication table incomplete at ({a!r},{b!r})")
        for a in els:
            if self.mult[(e, a)] != a or self.mult[(a, e)] != a:
                raise DomainError("element 0 is not an identity")
            if a not in self.inv or self.inv[a] not in eset:
                raise DomainError(f"inverse table incomplete at {a!r}")
            if self.mult[(a, self.inv[a])] != e or self.mult[(self.inv[a], a)] != e:
                raise DomainError(f"inverse table wrong at {a!r}")
        for a in els:
            for b in els:
                for c in els:
                    if self.mult[(self.mult[(a, b)], c)] != self.mult[(a, self.mult[(b, c)])]:
                        raise DomainError("multiplication is not associative")
        if not self.gbasis:
            raise DomainError("gbasis is empty")
        if self.gbasis[0] != frozenset(els):
            raise DomainError("gbasis[0] must be the whole group")
        for i, v in enumerate(self.gbasis):
            if not v:
                raise DomainError(f"gbasis set {i} is empty; basic group opens must be nonempty")
        # Delegates the cover and refinement checks.
        FinTopSpace.build(els, self.gbasis)

    @property
    def identity(self):
        return self.elements[0]

    @property
    def space(self) -> FinTopSpace:
        """The group viewed as a finite space (points = elements)."""
        return FinTopSpace(self.elements, self.gbasis)

    def product_set(self, A: Iterable, B: Iterable) -> frozenset:
        return frozenset(self.mult[(a, b)] for a in A for b in B)

    def inverse_set(self, A: Iterable) -> frozenset:
        return frozenset(self.inv[a] for a in A)


@dataclass(frozen=True)
class GSpaceInstance:
    """A finite group acting on a finite space by homeomorphisms.

    Validation enforces the action axioms, that every element acts as a
    homeomorphism, and that the action is jointly continuous with respect to
    the two bases (for every g.x in U_j some basic V_k containing g and U_i
    containing x satisfy V_k U_i inside U_j).  Joint continuity is what the
    transform/codability theory presumes; instances violating it are
    rejected rather than silently producing vacuous results.
    """

    group: FinGroup
    space: FinTopSpace
    action: dict

    @staticmethod
    def build(group: FinGroup, space: FinTopSpace, action) -> "GSpaceInstance":
        inst = GSpaceInstance(group, space, dict(action))
        inst._validate()
        return inst

    def _validate(self) -> None:
        g0 = self.group.identity
        pts = self.space.point_set
        for g in self.group.elements:
            for x in self.space.points:
                if (g, x) not in self.action or self.action[(g, x)] not in pts:
                    raise DomainError(f"action table incomplete at ({g!r},{x!r})")
        for x in self.space.points:
            if self.action[(g0, x)] != x:
                raise DomainError("identity does not act trivially")
        for g in self.group.elements:
            for h in self.group.elements:
                gh = self.group.mult[(g, h)]
                for x in self.space.points:
                    if self.action[(g, self.action[(h, x)])] != self.action[(gh, x)]:
                        raise DomainError(f"action not compatible with multiplication at ({g!r},{h!r})")
        for g in self.group.elements:
            image = {self.action[(g, x)] for x in self.space.points}
            if len(image) != len(self.space.points):
                raise DomainError(f"element {g!r} does not act bijectively")
            for i, b in enumerate(self.space.basis):
                img = frozenset(self.action[(g, x)] for x in b)
                if not self.space.is_open(img):
                    raise DomainError(f"element {g!r} maps basis set {i} to a non-open set")
        self._check_joint_continuity()

    def _check_joint_continuity(self) -> None:
        prods = {}
        for k, v in enumerate(self.group.gbasis):
            for i, u in enumerate(self.space.basis):
                prods[(k, i)] = translate(self, v, u)
        for g in self.group.elements:
            for x in self.space.points:
                gx = self.action[(g, x)]
                for j, uj in enumerate(self.space.basis):
                    if gx not in uj:
                        continue
                    ok = any(
                        g in self.group.gbasis[k] and x in self.space.basis[i] and prods[(k, i)] <= uj
                        for k in range(len(self.group.gbasis))
                        for i in range(len(self.space.basis))
                    )
                    if not ok:
                        raise DomainError(
                            f"action is not jointly continuous at ({g!r},{x!r}) into basis set {j}"
                        )

    def apply(self, g, x):
        return self.action[(g, x)]

    def orbit(self, x) -> frozenset:
        return frozenset(self.action[(g, x)] for g in self.group.elements)


@dataclass(frozen=True)
class CodabilityRecord:
    """The finite index relations describing a point, group and action.

    r_x  = basis indices of sets containing the point,
    r_o  = {(k,l,n): V_k V_l inside V_n},
    r_i  = {(k,l): V_k^{-1} inside V_l},
    r_a  = {(k,i,j): V_k U_i inside U_j}.
    """

    r_x: frozenset
    r_o: frozenset
    r_i: frozenset
    r_a: frozenset


def translate(instance: GSpaceInstance, V: Iterable, A: Iterable[Hashable]) -> PointSet:
    """The set V.A = {g.a : g in V, a in A}."""
    V = frozenset(V)
    unknown = V - set(instance.group.elements)
    if unknown:
        raise DomainError(f"unknown group elements {sorted(map(str, unknown))}")
    A = instance.space.check_subset(A)
    return frozenset(instance.action[(g, a)] for g in V for a in A)


def inverse_translate(instance: GSpaceInstance, V: Iterable, A: Iterable[Hashable]) -> PointSet:
    """The set V^{-1}.A, via the inverse table."""
    V = frozenset(V)
    return translate(instance, instance.group.inverse_set(V), A)


def vaught_star(instance: GSpaceInstance, B: Iterable[Hashable], H: Iterable) -> PointSet:
    """The *-transform: points x with {g in H : g.x in B} comeagre in H."""
    B = instance.space.check_subset(B)
    H = frozenset(H)
    gspace_view = instance.group.space
    if not H:
        raise DomainError("H must be a nonempty open subset of the group")
    if not gspace_view.is_open(H):
        raise DomainError("H is not open in the group topology")
    out = set()
    for x in instance.space.points:
        hits = frozenset(g for g in H if instance.action[(g, x)] in B)
        if comeagre_in(gspace_view, hits, H):
            out.add(x)
    return frozenset(out)


def is_invariant(instance: GSpaceInstance, B: Iterable[Hashable]) -> bool:
    """Is B closed under the whole group action?"""
    B = instance.space.check_subset(B)
    full = frozenset(instance.group.elements)
    inv = translate(instance, full, B) == B
    # The transform characterisation must agree; a failure here is a bug.
    assert (vaught_star(instance, B, full) == B) == inv
    return inv


def basis_meet_witnesses(target, k: int, l: int) -> list[int]:
    """Dispatch :func:`topology.basis_meet_witnesses` over instance/group/space."""
    if isinstance(target, GSpaceInstance):
        return topology.basis_meet_witnesses(target.space, k, l)
    if isinstance(target, FinGroup):
        return topology.basis_meet_witnesses(target.space, k, l)
    return topology.basis_meet_witnesses(target, k, l)


def codability(instance: GSpaceInstance, x) -> CodabilityRecord:
    """Compute the four index relations by exhaustive enumeration."""
    if x not in instance.space.point_set:
        raise DomainError(f"point {x!r} is not in the space")
    gb = instance.group.gbasis
    sb = instance.space.basis
    r_x = frozenset(n for n, u in enumerate(sb) if x in u)
    r_o = frozenset(
        (k, l, n)
        for k, vk in enumerate(gb)
        for l, vl in enumerate(gb)
        for n, vn in enumerate(gb)
        if instance.group.product_set(vk, vl) <= vn
    )
    r_i = frozenset(
        (k, l)
        for k, vk in enumerate(gb)
        for l, vl in enumerate(gb)
        if instance.group.inverse_set(vk) <= vl
    )
    r_a = frozenset(
        (k, i, j)
        for k, vk in enumerate(gb)
        for i, ui in enumerate(sb)
        for j, uj in enumerate(sb)
        if translate(instance, vk, ui) <= uj
    )
    return CodabilityRecord(r_x, r_o, r_i, r_a)


def reconstruct_action(instance: GSpaceInstance, record: CodabilityRecord) -> Callable:
    """Rebuild the action-membership test {(g,x,j): g.x in U_j} from r_a.

    Returns a predicate P(g, x, j).  Before returning, P is checked against
    the instance on every triple; a mismatch raises
    :class:`VerificationError` with the offending (g, x, j).
    """
    gb = instance.group.gbasis
    sb = instance.space.basis
    by_j: dict[int, list[tuple[int, int]]] = {}
    for (k, i, j) in record.r_a:
        by_j.setdefault(j, []).append((k, i))

    def predicate(g, x, j: int) -> bool:
        return any(g in gb[k] and x in sb[i] for (k, i) in by_j.get(j, ()))

    for g in instance.group.elements:
        for x in instance.space.points:
            gx = instance.action[(g, x)]
            for j, uj in enumerate(sb):
                if predicate(g, x, j) != (gx in uj):
                    raise VerificationError(
                        f"reconstructed action disagrees with the instance at ({g!r},{x!r},{j})",
                        counterexample=(g, x, j),
                    )
    return predicate
