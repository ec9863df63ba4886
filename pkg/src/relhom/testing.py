"""Seeded random generators for property testing.

Naive uniform generation of chain maps almost never commutes, so maps
are generated degree by degree: the top component is free, and each
lower component is obtained by solving the commuting-square equation
over the integers (plus a random kernel element for spread); unsolvable
draws are discarded and retried.
"""

from __future__ import annotations

import random
from typing import Optional

from relhom.complexes import ChainComplex, ChainMap, HomotopyOperator
from relhom.exact import IntegerMatrix, integer_solve_matrix, kernel_basis


def random_matrix(rng: random.Random, rows: int, cols: int, bound: int = 3) -> IntegerMatrix:
    return IntegerMatrix(rows, cols, [rng.randint(-bound, bound) for _ in range(rows * cols)])


def random_chain_complex(
    rng: random.Random,
    max_degree: int = 4,
    max_dim: int = 5,
    bound: int = 3,
) -> ChainComplex:
    """Random bounded chain complex with exact d d = 0.

    Boundaries are built downward: each one is a random integer
    combination of kernel basis vectors of the one below, which forces
    the composite to vanish.
    """
    top = rng.randint(0, max_degree)
    degrees = list(range(0, top + 1))
    dims = {n: rng.randint(0, max_dim) for n in degrees}
    maps: dict[int, IntegerMatrix] = {}
    prev_kernel: Optional[IntegerMatrix] = None
    for n in degrees:
        rows = dims.get(n - 1, 0)
        cols = dims[n]
        if n == 0 or rows == 0 or cols == 0:
            m = IntegerMatrix.zeros(rows, cols)
        else:
            basis = prev_kernel if prev_kernel is not None else IntegerMatrix.identity(rows)
            coeffs = random_matrix(rng, basis.cols, cols, bound=1)
            m = basis @ coeffs
        maps[n] = m
        prev_kernel = kernel_basis(m)
    return ChainComplex(dims, maps, grading="chain")


def random_chain_map(
    rng: random.Random,
    source: Optional[ChainComplex] = None,
    target: Optional[ChainComplex] = None,
    bound: int = 2,
    attempts: int = 50,
) -> ChainMap:
    """Random chain map with commuting squares.

    The component in the top degree is drawn freely; lower components
    solve d_Y f_n = f_{n-1} d_X column by column.  Solved components are
    perturbed by kernel elements of the constraint system.
    """
    for _ in range(attempts):
        x = source or random_chain_complex(rng)
        y = target or random_chain_complex(rng)
        degs = sorted(set(x.degree_range()) | set(y.degree_range()), reverse=True)
        comps: dict[int, IntegerMatrix] = {}
        ok = True
        for n in degs:
            rows, cols = y.dim(n), x.dim(n)
            upper = comps.get(n + 1)
            if upper is None:
                comps[n] = random_matrix(rng, rows, cols, bound=bound)
                continue
            # Constraint: f_n d^X_{n+1} = d^Y_{n+1} f_{n+1}; solve for f_n
            # in vectorized form, entries of f_n as unknowns.
            dx = x.map(n + 1)
            rhs_m = y.map(n + 1) @ upper
            nun = rows * cols
            a_rows = []
            b = []
            for i in range(rows):
                for j in range(dx.cols):
                    row = [0] * nun
                    for k in range(cols):
                        row[i * cols + k] = dx[k, j]
                    a_rows.append(row)
                    b.append(rhs_m[i, j])
            a = IntegerMatrix.from_rows(a_rows, cols=nun)
            sol = integer_solve_matrix(a, IntegerMatrix.column(b))
            if sol is None:
                ok = False
                break
            vec = list(sol.col(0))
            kb = kernel_basis(a)
            if kb.cols:
                shift = kb.apply([rng.randint(-1, 1) for _ in range(kb.cols)])
                vec = [v + s for v, s in zip(vec, shift)]
            comps[n] = IntegerMatrix(rows, cols, vec)
        if not ok:
            if source is not None and target is not None:
                continue
            continue
        try:
            return ChainMap(x, y, comps)
        except Exception:
            continue
    raise RuntimeError("failed to generate a commuting chain map")


def random_homotopy_triple(
    rng: random.Random, bound: int = 2
) -> tuple[ChainMap, ChainMap, HomotopyOperator]:
    """(f, g, h) with h d + d h = f - g, built by choosing f and h freely
    and defining g = f - h d - d h."""
    f = random_chain_map(rng, bound=bound)
    x, y = f.source, f.target
    hmaps = {n: random_matrix(rng, y.dim(n + 1), x.dim(n), bound=bound)
             for n in x.degrees() if y.dim(n + 1) and x.dim(n)}
    degs = set(x.degree_range()) | set(y.degree_range())
    gcomps = {}
    for n in degs:
        h_low = hmaps.get(n - 1, IntegerMatrix.zeros(y.dim(n), x.dim(n - 1)))
        h_here = hmaps.get(n, IntegerMatrix.zeros(y.dim(n + 1), x.dim(n)))
        gcomps[n] = f.component(n) - h_low @ x.map(n) - y.map(n + 1) @ h_here
    g = ChainMap(x, y, gcomps)
    h = HomotopyOperator(f, g, hmaps)
    return f, g, h
