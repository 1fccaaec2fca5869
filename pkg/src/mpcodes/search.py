"""Randomized search for constituent codes meeting checker conditions.

Given a defining matrix, a mode (self-orthogonal or dual-containing),
a Galois level and target dimensions, the search constructs candidate
constituent tuples that satisfy the corresponding checker's witness
conditions by construction where possible:

* containment constraints restrict each constituent to an intersection
  of known duals, and generators are sampled inside that subspace;
* a self-orthogonality constraint on a single constituent is met by
  greedy extension with orthogonality rechecked per sampled row;
* a dual-containment constraint on a single constituent is met by
  sampling a self-orthogonal complement and dualizing it.

Candidates whose expanded minimum distance meets the target are
reported.  Everything is driven by a seeded generator, so a rerun with
the same request reproduces the same candidates.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field

from .gf import FieldSpec
from .lincode import DistanceBudget, DistanceResult, LinearCode
from .matgf import MatGF
from .mpcode import (
    MPCode,
    Verdict,
    check_dual_containing_general,
    check_self_orthogonal,
    expand,
)

__all__ = ["InfeasibleSearchError", "SearchHit", "SearchRequest", "search_mp_codes"]


class InfeasibleSearchError(ValueError):
    """No constituent choice can satisfy the witness conditions."""


@dataclass(frozen=True)
class SearchRequest:
    mode: str  # "so" | "dc"
    ell: int
    n: int
    dims: tuple[int, ...]
    target: int | None = None
    seed: int = 0
    count: int = 1
    max_candidates: int = 2000
    budget: DistanceBudget = dc_field(default_factory=DistanceBudget)


@dataclass(frozen=True)
class SearchHit:
    mp: MPCode
    distance: DistanceResult
    attempt: int


def _random_vector_in(code: LinearCode, rng: random.Random) -> list[int] | None:
    """A uniformly random element of the code (possibly zero)."""
    if code.k == 0:
        return None
    spec = code.spec
    q = spec.q
    out = [0] * code.n
    for row in code.gen.data:
        lam = rng.randrange(q)
        if lam:
            out = [spec.add(x, spec.mul(lam, int(y))) for x, y in zip(out, row)]
    return out


def _extends_rank(rows: list[list[int]], vec: list[int], spec: FieldSpec) -> bool:
    mat = MatGF(spec, rows + [vec]) if rows else MatGF(spec, [vec])
    return mat.rank() == len(rows) + 1


def _sample_inside(
    ambient: LinearCode,
    dim: int,
    rng: random.Random,
    *,
    so_ell: int | None = None,
    tries: int = 200,
) -> LinearCode | None:
    """A random dim-dimensional subcode of ambient; when ``so_ell`` is
    given, the result is additionally l-Galois self-orthogonal."""
    spec = ambient.spec
    if dim > ambient.k:
        return None
    if dim == 0:
        return LinearCode.zero(spec, ambient.n)
    rows: list[list[int]] = []
    space = ambient
    for _ in range(tries):
        if len(rows) == dim:
            break
        vec = _random_vector_in(space, rng)
        if vec is None or not any(vec):
            continue
        if so_ell is not None:
            cand = LinearCode.from_generator(MatGF(spec, rows + [vec]))
            if not cand.is_galois_self_orthogonal(so_ell):
                continue
        if _extends_rank(rows, vec, spec):
            rows.append(vec)
            if so_ell is not None:
                # restrict further samples to vectors orthogonal to the
                # rows chosen so far, in both slot orders
                row_code = LinearCode.from_generator(MatGF(spec, rows))
                space = (
                    ambient
                    & row_code.galois_dual(so_ell)
                    & row_code.galois_dual((spec.e - so_ell) % spec.e)
                )
    if len(rows) != dim:
        return None
    return LinearCode.from_generator(MatGF(spec, rows))


def _sample_dual_containing(
    spec: FieldSpec,
    n: int,
    dim: int,
    ell: int,
    base: LinearCode,
    rng: random.Random,
) -> LinearCode | None:
    """A random code of the given dimension that contains ``base`` and
    its own l-Galois dual.

    Works through the complement: C contains its dual iff the dual D has
    the complementary dimension, lies inside the dual of ``base`` and is
    (e-l)-Galois self-orthogonal with C the (e-l)-Galois dual of D.
    """
    if 2 * dim < n or dim < base.k:
        return None
    co_dim = n - dim
    inv_ell = (spec.e - ell) % spec.e
    ambient = base.galois_dual(ell)
    d = _sample_inside(ambient, co_dim, rng, so_ell=inv_ell)
    if d is None:
        return None
    cand = d.galois_dual(inv_ell)
    if cand.k != dim or not base.is_subcode(cand):
        return None
    if not cand.galois_dual(ell).is_subcode(cand):
        return None
    return cand


def _so_attempt(
    a: MatGF, req: SearchRequest, rng: random.Random
) -> MPCode | None:
    spec = a.spec
    m = a.rows
    cond = a.frobenius_map(req.ell) @ a.T
    ell = req.ell
    inv_ell = (spec.e - ell) % spec.e
    chosen: list[LinearCode] = []
    for i in range(1, m + 1):
        ambient = LinearCode.full(spec, req.n)
        for j in range(1, i):
            if cond.data[i - 1, j - 1] != 0:
                # C_i inside the l-Galois dual of C_j
                ambient = ambient & chosen[j - 1].galois_dual(ell)
            if cond.data[j - 1, i - 1] != 0:
                # C_j inside the l-Galois dual of C_i
                ambient = ambient & chosen[j - 1].galois_dual(inv_ell)
        so_ell = ell if cond.data[i - 1, i - 1] != 0 else None
        c = _sample_inside(ambient, req.dims[i - 1], rng, so_ell=so_ell)
        if c is None:
            return None
        chosen.append(c)
    return MPCode(chosen, a)


def _dc_forced_full(a: MatGF, ell: int) -> tuple[set[int], list[tuple[int, int]]]:
    """Forced whole-space constituents and containment pairs for the
    dual-containment conditions of a full-row-rank defining matrix.

    Raises InfeasibleSearchError when the condition matrix has a nonzero
    entry in the region no constituent choice can fix.
    """
    m = a.rows
    completion = a.complete_to_invertible()
    zeta = (completion.frobenius_map(ell) @ completion.T).inverse()
    n_cols = zeta.rows
    forced: set[int] = set()
    pairs: list[tuple[int, int]] = []
    for i in range(1, n_cols + 1):
        for j in range(1, n_cols + 1):
            if zeta.data[i - 1, j - 1] == 0:
                continue
            if i > m and j > m:
                raise InfeasibleSearchError(
                    f"condition matrix entry ({i},{j}) is nonzero but both "
                    "indices exceed the constituent count; no choice of "
                    "constituents can give a dual-containing code"
                )
            if i <= m < j:
                forced.add(i)
            elif j <= m < i:
                forced.add(j)
            else:
                pairs.append((i, j))
    return forced, pairs


def _dc_attempt(
    a: MatGF, req: SearchRequest, rng: random.Random
) -> MPCode | None:
    spec = a.spec
    m = a.rows
    ell = req.ell
    inv_ell = (spec.e - ell) % spec.e
    forced, pairs = _dc_forced_full(a, ell)
    for i in forced:
        if req.dims[i - 1] != req.n:
            raise InfeasibleSearchError(
                f"constituent {i} is forced to the whole space code but "
                f"dims[{i - 1}] = {req.dims[i - 1]} != n = {req.n}"
            )
    chosen: dict[int, LinearCode] = {
        i: LinearCode.full(spec, req.n) for i in forced
    }
    for i in range(1, m + 1):
        if i in chosen:
            continue
        base = LinearCode.zero(spec, req.n)
        for src, dst in pairs:
            if dst == i and src in chosen and src != i:
                base = base + chosen[src].galois_dual(ell)
            if src == i and dst in chosen and dst != i:
                # dual(C_i) inside chosen C_dst, i.e. C_i contains the
                # inverse-Galois dual of C_dst
                base = base + chosen[dst].galois_dual(inv_ell)
        need_dc = (i, i) in pairs
        dim = req.dims[i - 1]
        if need_dc:
            c = _sample_dual_containing(spec, req.n, dim, ell, base, rng)
        else:
            c = None
            if base.k <= dim:
                extra = _sample_inside(LinearCode.full(spec, req.n), dim, rng)
                if extra is not None:
                    cand = base + extra
                    # top up or trim by resampling if the dimension is off
                    c = cand if cand.k == dim else None
        if c is None:
            return None
        chosen[i] = c
    return MPCode([chosen[i] for i in range(1, m + 1)], a)


def search_mp_codes(a: MatGF, req: SearchRequest) -> list[SearchHit]:
    """Seeded search for MP codes passing the requested check.

    Returns up to ``req.count`` hits, each verified by the exact checker
    and (when a target is given) meeting the distance target.
    """
    if req.mode not in ("so", "dc"):
        raise ValueError(f"unknown search mode {req.mode!r}")
    if len(req.dims) != a.rows:
        raise ValueError(
            f"dims has {len(req.dims)} entries, defining matrix has {a.rows} rows"
        )
    if not all(0 <= d <= req.n for d in req.dims):
        raise ValueError("dims entries must lie in [0, n]")
    if req.mode == "dc" and a.rank() != a.rows:
        raise InfeasibleSearchError(
            "dual-containment search requires a full-row-rank defining matrix"
        )
    rng = random.Random(req.seed)
    hits: list[SearchHit] = []
    for attempt in range(1, req.max_candidates + 1):
        mp = (
            _so_attempt(a, req, rng)
            if req.mode == "so"
            else _dc_attempt(a, req, rng)
        )
        if mp is None:
            continue
        if req.mode == "so":
            report = check_self_orthogonal(mp, req.ell)
        else:
            report = check_dual_containing_general(mp, req.ell)
        if report.verdict is not Verdict.HOLDS:
            continue
        big = expand(mp)
        if big.k == 0:
            continue
        dist = big.min_distance(req.budget)
        if req.target is not None and not (dist.exact and dist.d >= req.target):
            continue
        hits.append(SearchHit(mp, dist, attempt))
        if len(hits) >= req.count:
            break
    return hits
