"""Cluster combinatorics on the variables Phi(real Schur roots) + negative simples.

A cluster variable is stored as a plain integer vector: either a positive
real Schur root, or minus a simple root (exactly one entry -1).  A set of
variables is a precluster when the extension invariant vanishes on every
ordered pair of positive members and no negative simple touches the support
of a positive member.  Clusters are the maximal preclusters; they all have
exactly as many elements as the quiver has vertices, which the enumeration
asserts rather than assumes.

Enumeration runs over the compatibility graph: preclusters are its cliques,
clusters its maximal cliques.  A naive subset-scan oracle is kept alongside
for cross-validation.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import networkx as nx
import numpy as np

from .einv import e_invariant, real_schur_roots
from .errors import BadIndex, CompletionNotFound, NotAPartialOrder
from .quiver import DimVec, Quiver, support, tits_form, unit


def negative_simple(q: Quiver, i: int) -> DimVec:
    """Minus the i-th simple root (1-based vertex index)."""
    if not 1 <= i <= q.n:
        raise BadIndex(f"vertex {i} outside 1..{q.n}")
    return tuple(-a for a in unit(q.n, i))


def classify_variable(v: DimVec) -> str | None:
    """'pos' for a nonzero nonnegative vector, 'neg' for minus a simple root,
    None for anything else."""
    if any(a > 0 for a in v):
        return "pos" if all(a >= 0 for a in v) else None
    if sum(1 for a in v if a == -1) == 1 and all(a in (0, -1) for a in v):
        return "neg"
    return None


def neg_vertex(v: DimVec) -> int:
    """The (1-based) vertex of a negative simple variable."""
    return next(i + 1 for i, a in enumerate(v) if a < 0)


def var_key(v: DimVec) -> tuple:
    """Canonical order: negative simples by vertex, then roots by (height, lex)."""
    if any(a < 0 for a in v):
        return (0, neg_vertex(v), v)
    return (1, sum(v), v)


def cluster_key(s) -> tuple:
    return tuple(var_key(v) for v in s)


def format_variable(v: DimVec) -> str:
    if any(a < 0 for a in v):
        return f"-e{neg_vertex(v)}"
    return "(" + ",".join(str(a) for a in v) + ")"


def split_variables(s):
    """Split into (positive roots, negative simples), each canonically sorted."""
    pos = sorted((v for v in s if any(a > 0 for a in v)), key=var_key)
    neg = sorted((v for v in s if any(a < 0 for a in v)), key=var_key)
    return tuple(pos), tuple(neg)


def is_precluster(q: Quiver, s) -> tuple[bool, str | None]:
    """Check the precluster conditions; reports the first violation.

    Positive members must be plausible cluster variables: unit Tits form
    plus vanishing self-extension invariant, which together pin down exactly
    the real Schur roots.  The vanishing is then tested on every ordered
    pair (the diagonal is covered by the membership check).
    """
    svars = []
    for v in s:
        v = q.check_dimvec(v, allow_negative=True)
        if v not in svars:
            svars.append(v)
    for v in svars:
        if classify_variable(v) is None:
            return (False, f"{v} is neither a positive vector nor a negative simple")
    pos, neg = split_variables(svars)
    for a in pos:
        tf = tits_form(q, a)
        if tf != 1:
            return (False, f"tits form of {a} is {tf}, not 1")
    for a in pos:
        for b in pos:
            val = e_invariant(q, a, b)
            if val != 0:
                return (False, f"e({a}, {b}) = {val} != 0")
    for v in neg:
        i = neg_vertex(v)
        for a in pos:
            if i in support(a):
                return (False, f"-e{i} meets the support of {a}")
    return (True, None)


def is_positive_precluster(q: Quiver, s) -> bool:
    """A precluster with no negative members."""
    if any(any(a < 0 for a in q.check_dimvec(v, allow_negative=True)) for v in s):
        return False
    return is_precluster(q, s)[0]


def compatible(q: Quiver, u: DimVec, v: DimVec) -> bool:
    """Pairwise compatibility of two distinct, well-formed variables."""
    u_neg = any(a < 0 for a in u)
    v_neg = any(a < 0 for a in v)
    if u_neg and v_neg:
        return True
    if u_neg:
        return neg_vertex(u) not in support(v)
    if v_neg:
        return neg_vertex(v) not in support(u)
    return e_invariant(q, u, v) == 0 and e_invariant(q, v, u) == 0


def _variables(q: Quiver, bound, seed, budget):
    roots = real_schur_roots(q, bound=bound, seed=seed, budget=budget)
    negs = [negative_simple(q, i) for i in range(1, q.n + 1)]
    out = sorted(negs + list(roots.roots), key=var_key)
    return tuple(out), roots.complete


def cluster_variables(
    q: Quiver, bound: int | None = None, seed: int = 0, budget: int = 8
) -> tuple[DimVec, ...]:
    """All cluster variables: negative simples then real Schur roots."""
    return _variables(q, bound, seed, budget)[0]


@dataclass(frozen=True)
class Enumeration:
    """A canonically sorted enumeration result.

    ``complete`` is False when a height bound truncated the variable set, in
    which case items are exactly the answers within the bound.
    """

    items: tuple
    complete: bool
    height_bound: int | None

    def __iter__(self):
        return iter(self.items)

    def __len__(self):
        return len(self.items)

    def __getitem__(self, i):
        return self.items[i]

    def __contains__(self, x):
        return x in self.items


def _compat_graph(q: Quiver, variables):
    g = nx.Graph()
    g.add_nodes_from(range(len(variables)))
    for i, j in combinations(range(len(variables)), 2):
        if compatible(q, variables[i], variables[j]):
            g.add_edge(i, j)
    return g


def enumerate_clusters(
    q: Quiver, bound: int | None = None, seed: int = 0, budget: int = 8
) -> Enumeration:
    """All clusters: size-n subsets of pairwise compatible variables.

    Uses pivoting maximal-clique search on the compatibility graph.  On a
    complete variable set every maximal clique must have exactly n members
    (maximal preclusters are clusters); that fact is asserted at runtime.
    """
    variables, complete = _variables(q, bound, seed, budget)
    g = _compat_graph(q, variables)
    found = []
    for clique in nx.find_cliques(g):
        if len(clique) > q.n:
            raise RuntimeError(
                f"internal error: {len(clique)} pairwise compatible variables "
                f"on a quiver with {q.n} vertices"
            )
        if complete and len(clique) != q.n:
            raise RuntimeError(
                "internal error: a maximal compatible set of size "
                f"{len(clique)} != {q.n} on a Dynkin quiver"
            )
        if len(clique) == q.n:
            found.append(tuple(sorted((variables[i] for i in clique), key=var_key)))
    found.sort(key=cluster_key)
    return Enumeration(tuple(found), complete, bound)


def enumerate_clusters_naive(
    q: Quiver, bound: int | None = None, seed: int = 0, budget: int = 8
) -> tuple:
    """Subset-scan oracle for cluster enumeration (no clique search)."""
    variables, _ = _variables(q, bound, seed, budget)
    found = []
    for combo in combinations(variables, q.n):
        if is_precluster(q, combo)[0]:
            found.append(tuple(sorted(combo, key=var_key)))
    found.sort(key=cluster_key)
    return tuple(found)


def enumerate_preclusters(
    q: Quiver,
    positive_only: bool = False,
    bound: int | None = None,
    seed: int = 0,
    budget: int = 8,
) -> Enumeration:
    """All preclusters (cliques of the compatibility graph, plus the empty set)."""
    variables, complete = _variables(q, bound, seed, budget)
    if positive_only:
        variables = tuple(v for v in variables if all(a >= 0 for a in v))
    g = _compat_graph(q, variables)
    items = [()]
    for clique in nx.enumerate_all_cliques(g):
        items.append(tuple(sorted((variables[i] for i in clique), key=var_key)))
    items.sort(key=lambda c: (len(c), cluster_key(c)))
    return Enumeration(tuple(items), complete, bound)


def complete_to_cluster(
    q: Quiver, s, bound: int | None = None, seed: int = 0, budget: int = 8
) -> tuple:
    """Extend a precluster to a cluster, returning the lexicographically least
    extension in canonical variable order (negative simples first).

    Dynkin quivers always admit a completion.  With a height bound the search
    may legitimately fail, which raises CompletionNotFound.
    """
    svars = sorted({q.check_dimvec(v, allow_negative=True) for v in s}, key=var_key)
    ok, why = is_precluster(q, svars)
    if not ok:
        raise ValueError(f"not a precluster: {why}")
    if len(svars) == q.n:
        return tuple(svars)
    variables, _ = _variables(q, bound, seed, budget)
    chosen_set = set(svars)
    cands = [
        v
        for v in variables
        if v not in chosen_set and all(compatible(q, v, w) for w in svars)
    ]
    need = q.n - len(svars)

    def dfs(chosen, start):
        if len(chosen) == need:
            return chosen
        for idx in range(start, len(cands)):
            if len(cands) - idx < need - len(chosen):
                break
            v = cands[idx]
            if all(compatible(q, v, w) for w in chosen):
                out = dfs(chosen + [v], idx + 1)
                if out is not None:
                    return out
        return None

    extra = dfs([], 0)
    if extra is None:
        raise CompletionNotFound(
            f"no cluster contains {svars}"
            + ("" if bound is None else f" within height bound {bound}")
        )
    return tuple(sorted(svars + extra, key=var_key))


def cluster_geq(q: Quiver, s, t) -> bool:
    """The cluster order: s >= t iff e(a, b) = 0 for every positive a of s
    and positive b of t, and the negatives of s are contained in those of t."""
    pos_s, neg_s = split_variables(s)
    pos_t, neg_t = split_variables(t)
    if not set(neg_s) <= set(neg_t):
        return False
    return all(e_invariant(q, a, b) == 0 for a in pos_s for b in pos_t)


def cluster_leq(q: Quiver, s, t) -> bool:
    """s <= t in the cluster order."""
    return cluster_geq(q, t, s)


@dataclass(frozen=True, eq=False)
class ClusterPoset:
    """A finite poset of enumerated elements.

    ``leq[i, j]`` says element i <= element j; ``hasse`` lists cover pairs
    (i, j) with i covered by j.  ``top``/``bottom`` are element indices, or
    None when the (possibly truncated) set has no greatest/least element.
    """

    elements: tuple
    leq: np.ndarray
    hasse: tuple[tuple[int, int], ...]
    top: int | None
    bottom: int | None
    complete: bool
    height_bound: int | None

    def __len__(self):
        return len(self.elements)


def assemble_poset(elements, leq, complete: bool, height_bound) -> ClusterPoset:
    """Verify the order axioms on a relation matrix and package the poset.

    Raises NotAPartialOrder with a concrete witness if reflexivity,
    antisymmetry or transitivity fails.
    """
    leq = np.asarray(leq, dtype=bool)
    m = len(elements)
    if leq.shape != (m, m):
        raise NotAPartialOrder(f"relation shape {leq.shape} for {m} elements")
    if m:
        diag = np.diagonal(leq)
        if not diag.all():
            i = int(np.flatnonzero(~diag)[0])
            raise NotAPartialOrder(f"not reflexive at element {i}", index=i)
        sym = leq & leq.T
        np.fill_diagonal(sym, False)
        if sym.any():
            i, j = map(int, np.argwhere(sym)[0])
            raise NotAPartialOrder(
                f"antisymmetry fails: elements {i} and {j} compare both ways",
                pair=(i, j),
            )
        closure = (leq.astype(np.uint8) @ leq.astype(np.uint8)) > 0
        gap = closure & ~leq
        if gap.any():
            i, j = map(int, np.argwhere(gap)[0])
            raise NotAPartialOrder(
                f"transitivity fails: a path joins {i} to {j} but leq does not",
                pair=(i, j),
            )
    eye = np.eye(m, dtype=bool)
    lt = leq & ~eye
    two_step = (lt.astype(np.uint8) @ lt.astype(np.uint8)) > 0
    hasse_mat = lt & ~two_step
    hasse = tuple((int(i), int(j)) for i, j in np.argwhere(hasse_mat))
    bottoms = np.flatnonzero(leq.all(axis=1)) if m else []
    tops = np.flatnonzero(leq.all(axis=0)) if m else []
    leq = leq.copy()
    leq.setflags(write=False)
    return ClusterPoset(
        elements=tuple(elements),
        leq=leq,
        hasse=hasse,
        top=int(tops[0]) if len(tops) else None,
        bottom=int(bottoms[0]) if len(bottoms) else None,
        complete=complete,
        height_bound=height_bound,
    )


def cluster_poset(
    q: Quiver, bound: int | None = None, seed: int = 0, budget: int = 8
) -> ClusterPoset:
    """All clusters under the cluster order, with verified axioms."""
    enum = enumerate_clusters(q, bound=bound, seed=seed, budget=budget)
    m = len(enum.items)
    leq = np.zeros((m, m), dtype=bool)
    for i in range(m):
        for j in range(m):
            leq[i, j] = cluster_geq(q, enum.items[j], enum.items[i])
    return assemble_poset(enum.items, leq, enum.complete, enum.height_bound)
