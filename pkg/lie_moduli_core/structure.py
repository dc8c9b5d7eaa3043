"""
Basis-independent structure of a Lie algebra given as a Codifferential:
derived and lower central series, center, centralizers, Killing form and
the nilradical. Subspaces are lists of coordinate vectors in RREF.
"""
from typing import List, Sequence, Tuple

from .cochains import Codifferential
from .exact_math import RatMatrix, Vector, kernel_basis, span_basis, to_vector

Subspace = List[Vector]


def unit_vectors(n: int) -> Subspace:
    return [to_vector([1 if i == j else 0 for i in range(n)]) for j in range(n)]


def bracket_span(d: Codifferential, left: Sequence[Vector], right: Sequence[Vector]) -> Subspace:
    """Span of [u, w] for u in left, w in right."""
    products = [d.bracket_vectors(u, w) for u in left for w in right]
    return span_basis(products, d.n)


def derived_algebra(d: Codifferential) -> Subspace:
    return span_basis(d.matrix.columns(), d.n)


def derived_series(d: Codifferential) -> List[Subspace]:
    """
    L^(1) = [L, L], L^(k+1) = [L^(k), L^(k)], stopping once a term is zero
    or equals its predecessor.
    """
    series = [derived_algebra(d)]
    while series[-1]:
        nxt = bracket_span(d, series[-1], series[-1])
        if len(nxt) == len(series[-1]):
            break
        series.append(nxt)
    return series


def lower_central_series(d: Codifferential) -> List[Subspace]:
    """L^1 = [L, L], L^(k+1) = [L, L^k], with the same stopping rule."""
    whole = unit_vectors(d.n)
    series = [derived_algebra(d)]
    while series[-1]:
        nxt = bracket_span(d, whole, series[-1])
        if len(nxt) == len(series[-1]):
            break
        series.append(nxt)
    return series


def derived_series_dims(d: Codifferential) -> Tuple[int, ...]:
    return tuple(len(s) for s in derived_series(d))


def lower_central_series_dims(d: Codifferential) -> Tuple[int, ...]:
    return tuple(len(s) for s in lower_central_series(d))


def is_solvable(d: Codifferential) -> bool:
    return not derived_series(d)[-1]


def is_nilpotent(d: Codifferential) -> bool:
    return not lower_central_series(d)[-1]


def centralizer(d: Codifferential, subspace: Sequence[Vector]) -> Subspace:
    """{x : [x, u] = 0 for every u in subspace}."""
    n = d.n
    if not subspace:
        return unit_vectors(n)
    units = unit_vectors(n)
    # Column k stacks [e_k, u] over all u.
    columns = []
    for e in units:
        stacked: List = []
        for u in subspace:
            stacked.extend(d.bracket_vectors(e, u))
        columns.append(stacked)
    return span_basis(kernel_basis(RatMatrix.from_columns(columns, n * len(subspace))), n)


def center(d: Codifferential) -> Subspace:
    return centralizer(d, unit_vectors(d.n))


def is_ideal(d: Codifferential, subspace: Sequence[Vector]) -> bool:
    if not subspace:
        return True
    images = bracket_span(d, unit_vectors(d.n), subspace)
    return len(span_basis(list(subspace) + images, d.n)) == len(span_basis(subspace, d.n))


def ad_matrices(d: Codifferential) -> List[RatMatrix]:
    return [d.ad_matrix(e) for e in unit_vectors(d.n)]


def killing_form(d: Codifferential) -> RatMatrix:
    """K[i][j] = tr(ad e_i · ad e_j)."""
    ads = ad_matrices(d)
    return RatMatrix([[(x @ y).trace() for y in ads] for x in ads], d.n)


def killing_rank(d: Codifferential) -> int:
    return killing_form(d).rank()


def adjoint_envelope(d: Codifferential) -> List[RatMatrix]:
    """
    Basis of the unital associative algebra generated by ad e_1 .. ad e_n.
    """
    n = d.n
    generators = ad_matrices(d)
    basis: List[RatMatrix] = []
    flat: List[Vector] = []

    def absorb(candidate: RatMatrix) -> bool:
        vectors = flat + [candidate.flatten()]
        if len(span_basis(vectors, n * n)) > len(flat):
            basis.append(candidate)
            flat.append(candidate.flatten())
            return True
        return False

    absorb(RatMatrix.identity(n))
    for g in generators:
        absorb(g)
    frontier = list(basis)
    while frontier:
        fresh = []
        for element in frontier:
            for g in generators:
                product = element @ g
                if absorb(product):
                    fresh.append(product)
        frontier = fresh
    return basis


def nilradical(d: Codifferential) -> Subspace:
    """
    Nilradical of a solvable algebra: the x with tr(ad x · w) = 0 for all w
    in the associative envelope of ad(L). Not meaningful for non-solvable input.
    """
    ads = ad_matrices(d)
    rows = [[(ad @ w).trace() for ad in ads] for w in adjoint_envelope(d)]
    return span_basis(kernel_basis(RatMatrix(rows, d.n)), d.n)


def complete_basis(subspace: Sequence[Vector], n: int) -> Subspace:
    """Standard unit vectors extending `subspace` to Q^n, chosen by RREF pivots."""
    chosen: List[Vector] = []
    current = list(subspace)
    rank = len(span_basis(current, n))
    for e in unit_vectors(n):
        if rank == n:
            break
        new_rank = len(span_basis(current + [e], n))
        if new_rank > rank:
            chosen.append(e)
            current.append(e)
            rank = new_rank
    return chosen


def contains(subspace: Sequence[Vector], vector: Sequence) -> bool:
    if not subspace:
        return not any(vector)
    n = len(vector)
    return len(span_basis(list(subspace) + [tuple(vector)], n)) == len(span_basis(subspace, n))
