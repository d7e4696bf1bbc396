"""On-disk formats: features CSV, hypergraph JSON, candidates CSV, report JSON.

Everything here is plain text so outputs diff cleanly and round-trip exactly:
feature floats are written with 17 significant digits, JSON keys are sorted,
and candidate rows are emitted in a deterministic order.
"""

from __future__ import annotations

import csv
import json
from pathlib import Path

import numpy as np

from .core import DomainError, Hypergraph, as_features, build_hypergraph
from .inference import Candidate, CandidateSet
from .metrics import MatchReport, SeparationReport
from .synth import SynthConfig

CANDIDATE_FIELDS = ("nodes", "size", "anchor", "s_prime", "prob")


def write_features(path, x) -> None:
    """One row per entity, comma-separated floats, no header."""
    np.savetxt(path, as_features(x), delimiter=",", fmt="%.17g")


def read_features(path) -> np.ndarray:
    return as_features(np.loadtxt(path, delimiter=",", ndmin=2), name=str(path))


def write_hypergraph(path, h: Hypergraph) -> None:
    payload: dict = {"n": h.n, "edges": [list(e) for e in h.edges]}
    if h.weights is not None:
        payload["weights"] = list(h.weights)
    Path(path).write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n")


def read_hypergraph(path) -> Hypergraph:
    payload = json.loads(Path(path).read_text())
    if not isinstance(payload, dict) or "n" not in payload or "edges" not in payload:
        raise DomainError(f"{path} is not a hypergraph file; keys 'n' and 'edges' required")
    return build_hypergraph(
        payload["n"], payload["edges"], weights=payload.get("weights")
    )


def write_candidates(path, cs: CandidateSet) -> None:
    """CSV of the scored pool, highest probability first.

    Node indices are ';'-joined in ascending order. Ties follow the selection
    rule (lower score, then smaller node tuple) so rewriting the same pool
    reproduces the file byte for byte.
    """
    if cs.scores is None or cs.probs is None:
        raise DomainError("candidate scores and probabilities must be attached first")
    order = sorted(
        range(len(cs.candidates)),
        key=lambda i: (-float(cs.probs[i]), float(cs.scores[i]), cs.candidates[i].nodes),
    )
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(CANDIDATE_FIELDS)
        for i in order:
            cand = cs.candidates[i]
            writer.writerow(
                [
                    ";".join(str(v) for v in cand.nodes),
                    cand.size,
                    cand.anchor,
                    str(float(cs.scores[i])),
                    str(float(cs.probs[i])),
                ]
            )


def load_candidates(path, n: int) -> CandidateSet:
    """Read a candidates CSV back into a fully scored pool over n nodes."""
    candidates: list[Candidate] = []
    scores: list[float] = []
    probs: list[float] = []
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames != list(CANDIDATE_FIELDS):
            raise DomainError(
                f"{path} has header {reader.fieldnames}, expected {list(CANDIDATE_FIELDS)}"
            )
        for row in reader:
            nodes = tuple(int(tok) for tok in row["nodes"].split(";"))
            if int(row["size"]) != len(nodes):
                raise DomainError(f"row for {row['nodes']} declares size {row['size']}")
            candidates.append(Candidate(nodes=nodes, anchor=int(row["anchor"])))
            scores.append(float(row["s_prime"]))
            probs.append(float(row["prob"]))
    sizes = tuple(sorted({c.size for c in candidates}))
    return CandidateSet(
        n=n,
        sizes=sizes,
        candidates=tuple(candidates),
        scores=np.array(scores),
        probs=np.array(probs),
    )


def write_metrics(
    path,
    match: MatchReport,
    hgmse_value: float,
    separation: SeparationReport | None = None,
) -> None:
    payload: dict = {
        "precision": match.precision,
        "recall": match.recall,
        "f1": match.f1,
        "hgmse": hgmse_value,
    }
    if separation is not None:
        block: dict = {}
        if separation.mean_truth_prob is not None:
            block["truth_mean"] = separation.mean_truth_prob
        if separation.mean_other_prob is not None:
            block["other_mean"] = separation.mean_other_prob
        if separation.gap is not None:
            block["gap"] = separation.gap
        payload["separation"] = block
    Path(path).write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n")


def read_metrics(path) -> dict:
    return json.loads(Path(path).read_text())


def write_manifest(path, cfg: SynthConfig, achieved_overlap: float, version: str) -> None:
    """Record every parameter needed to regenerate a dataset, plus the outcome."""
    payload = {
        "n": cfg.n,
        "edge_spec": {str(k): int(c) for k, c in sorted(cfg.edge_spec.items())},
        "target_overlap": cfg.target_overlap,
        "achieved_overlap": achieved_overlap,
        "sigma": cfg.sigma,
        "dim": cfg.dim,
        "seed": cfg.seed,
        "version": version,
    }
    Path(path).write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n")
