"""Shared test utilities: in-process CLI runs and random homogeneous polynomials."""

from __future__ import annotations

import contextlib
import io
import json
import random
import re

from ellrank.cli import main
from ellrank.hodge import monomials_of_weighted_degree
from ellrank.wpoly import WPolynomial


def run_cli(args: list[str]) -> tuple[int, dict, str]:
    """Run the CLI in-process; returns (exit code, parsed JSON, raw stdout)."""
    out = io.StringIO()
    err = io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = main(args)
    raw = out.getvalue()
    doc = json.loads(raw) if raw.strip() else None
    return code, doc, raw


def strip_timing(raw: str) -> str:
    return re.sub(r'"elapsed_ms": \d+', '"elapsed_ms": 0', raw)


def random_homogeneous(rng: random.Random, nvars: int, weights: tuple[int, ...],
                       degree: int, max_terms: int = 6,
                       names: tuple[str, ...] | None = None) -> WPolynomial | None:
    """Random weighted-homogeneous polynomial, or None if the degree is empty."""
    if names is None:
        names = tuple(f"v{i}" for i in range(nvars))
    monomials = monomials_of_weighted_degree(weights, degree)
    if not monomials:
        return None
    k = rng.randint(1, min(max_terms, len(monomials)))
    chosen = rng.sample(monomials, k)
    terms = {m: rng.randint(1, 6) * rng.choice((1, -1)) for m in chosen}
    return WPolynomial(names, weights, terms)


def random_weierstrass(rng: random.Random, n_base: int) -> WPolynomial:
    """y^2 - x^3 - g(z) with g random homogeneous of degree 6 in weight-1 z's."""
    names = ("x", "y") + tuple(f"z{i}" for i in range(n_base))
    weights = (2, 3) + (1,) * n_base
    terms = {}
    y_sq = (0, 2) + (0,) * n_base
    x_cu = (3, 0) + (0,) * n_base
    terms[y_sq] = 1
    terms[x_cu] = -1
    base_monomials = monomials_of_weighted_degree((1,) * n_base, 6)
    for m in rng.sample(base_monomials, rng.randint(1, min(4, len(base_monomials)))):
        terms[(0, 0) + m] = rng.randint(-8, 8) or 1
    return WPolynomial(names, weights, terms)
