"""End-to-end experiment protocol: synthesize, infer, evaluate, sweep.

run_protocol performs one generate-infer-evaluate cycle with per-size
selection set to the true edge counts, which is how every benchmark number in
this package is produced. run_sweep repeats that over a one-dimensional grid
with paired seeds, so differences along the axis are not seed noise.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

from .core import DomainError, Hypergraph, PerSize, normalize_features
from .inference import CandidateSet, infer_hypergraph
from .metrics import MatchReport, SeparationReport, f1_exact, hgmse, probability_separation
from .smoothness import VARIANT_KINDS, SmoothnessVariant
from .synth import SynthConfig, make_dataset

SWEEP_AXES = ("nodes", "edge-size", "overlap", "variant")

SWEEP_COLUMNS = ("axis", "value", "seed", "status", "f1", "hgmse", "f1_std", "hgmse_std")


@dataclass(frozen=True, eq=False)
class ProtocolResult:
    """Everything one benchmark run produces, ground truth included."""

    config: SynthConfig
    achieved_overlap: float
    truth: Hypergraph
    selected: Hypergraph
    candidates: CandidateSet
    match: MatchReport
    hgmse: float
    separation: SeparationReport


def run_protocol(
    n: int,
    edge_spec: Mapping[int, int],
    overlap: float,
    *,
    sigma: float = 1e-3,
    dim: int = 64,
    seed: int = 0,
    variant: SmoothnessVariant | None = None,
    normalize: bool = False,
) -> ProtocolResult:
    """One full cycle: sample a dataset, infer with true per-size counts, score it.

    normalize rescales the node features by a single global factor before
    inference, which leaves the selection unchanged but makes candidate
    probabilities comparable across datasets of different dimension.
    """
    cfg = SynthConfig(
        n=n,
        edge_spec=edge_spec,
        target_overlap=overlap,
        sigma=sigma,
        dim=dim,
        seed=seed,
    )
    ds = make_dataset(cfg)
    x = normalize_features(ds.x_nodes) if normalize else ds.x_nodes
    cs, pred = infer_hypergraph(
        x, sorted(cfg.edge_spec), PerSize(cfg.edge_spec), variant=variant
    )
    return ProtocolResult(
        config=cfg,
        achieved_overlap=ds.achieved_overlap,
        truth=ds.truth,
        selected=pred,
        candidates=cs,
        match=f1_exact(pred, ds.truth),
        hgmse=hgmse(pred, ds.truth),
        separation=probability_separation(cs, ds.truth),
    )


def _grid_kwargs(
    axis: str, value, base: dict, run_seed: int
) -> tuple[dict, SmoothnessVariant | None]:
    kwargs = dict(base)
    variant: SmoothnessVariant | None = None
    if axis == "nodes":
        kwargs["n"] = int(value)
    elif axis == "edge-size":
        total = sum(kwargs["edge_spec"].values())
        kwargs["edge_spec"] = {int(value): total}
    elif axis == "overlap":
        kwargs["overlap"] = float(value)
    elif axis == "variant":
        kind = str(value)
        if kind not in VARIANT_KINDS:
            raise DomainError(f"unknown variant {kind!r}; choose from {VARIANT_KINDS}")
        variant = SmoothnessVariant(
            kind=kind, seed=run_seed if kind == "random" else None
        )
    else:
        raise DomainError(f"unknown sweep axis {axis!r}; choose from {SWEEP_AXES}")
    return kwargs, variant


def run_sweep(
    axis: str,
    values: Sequence,
    reps: int,
    *,
    n: int = 100,
    edge_spec: Mapping[int, int] | None = None,
    overlap: float = 0.3,
    sigma: float = 1e-3,
    dim: int = 64,
    seed: int = 0,
    normalize: bool = False,
) -> list[dict]:
    """Grid of runs along one axis, reps per point, plus one summary row per point.

    Row schema follows SWEEP_COLUMNS; per-run rows leave the std columns None
    and summary rows carry seed="summary". A failed point becomes a row with
    status "error:<kind>" and the sweep moves on. Seeds are paired: rep r uses
    seed + r at every grid value.
    """
    if axis not in SWEEP_AXES:
        raise DomainError(f"unknown sweep axis {axis!r}; choose from {SWEEP_AXES}")
    if reps < 1:
        raise DomainError(f"reps must be >= 1, got {reps}")
    if not values:
        raise DomainError("sweep needs at least one grid value")
    base = {
        "n": n,
        "edge_spec": dict(edge_spec) if edge_spec is not None else {8: 12},
        "overlap": overlap,
        "sigma": sigma,
        "dim": dim,
        "normalize": normalize,
    }
    rows: list[dict] = []
    for value in values:
        f1s: list[float] = []
        errs: list[float] = []
        for rep in range(reps):
            run_seed = seed + rep
            row = {
                "axis": axis,
                "value": value,
                "seed": run_seed,
                "status": "ok",
                "f1": None,
                "hgmse": None,
                "f1_std": None,
                "hgmse_std": None,
            }
            try:
                kwargs, variant = _grid_kwargs(axis, value, base, run_seed)
                normalize_flag = kwargs.pop("normalize")
                result = run_protocol(
                    kwargs.pop("n"),
                    kwargs.pop("edge_spec"),
                    kwargs.pop("overlap"),
                    seed=run_seed,
                    variant=variant,
                    normalize=normalize_flag,
                    **kwargs,
                )
            except DomainError as exc:
                row["status"] = f"error:{type(exc).__name__}"
            else:
                row["f1"] = result.match.f1
                row["hgmse"] = result.hgmse
                f1s.append(result.match.f1)
                errs.append(result.hgmse)
            rows.append(row)
        if f1s:
            rows.append(
                {
                    "axis": axis,
                    "value": value,
                    "seed": "summary",
                    "status": "ok",
                    "f1": float(np.mean(f1s)),
                    "hgmse": float(np.mean(errs)),
                    "f1_std": float(np.std(f1s)),
                    "hgmse_std": float(np.std(errs)),
                }
            )
    return rows
