"""Command-line driver: read a schema-tagged JSON config, compute, write a deterministic artifact."""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path

from . import serialize as S
from .errors import ArtifactError, ConfigError

MODES = ("complete", "theta", "potential", "tropical", "cluster", "dp5", "render")


@dataclass(frozen=True)
class RunConfig:
    mode: str
    input: Path
    order_cap: int | None = None
    out: Path | None = None
    cache_dir: Path | None = None
    t_numeric: float | None = None
    chamber: str | None = None
    svg_scale: float = 40.0

    def __post_init__(self):
        if self.mode not in MODES:
            raise ConfigError(f"unknown mode {self.mode!r}")
        if self.order_cap is not None and self.order_cap < 1:
            raise ConfigError("--order must be at least 1")
        if self.svg_scale <= 0:
            raise ConfigError("--svg-scale must be positive")


def _cap(cfg: RunConfig, doc: dict, default: int) -> int:
    cap = cfg.order_cap if cfg.order_cap is not None else int(doc.get("order_cap", default))
    if cap < 1:
        raise ConfigError("order_cap must be at least 1")
    return cap


def _stop(doc: dict):
    if "stop" not in doc:
        raise ConfigError(f"{doc.get('schema')}: a 'stop' point is required for this mode")
    return (S.q(doc["stop"][0]), S.q(doc["stop"][1]))


def _completed(cfg: RunConfig, doc: dict, cap: int):
    """Completed diagram for a toric model or an initial diagram document, through the cache."""
    from .scattering import complete, gps_initial_diagram

    def compute():
        if doc["schema"] == "diagram/1":
            init = S.diagram_from_doc(doc)
            init = init.truncate(cap) if cap <= init.order_cap else S.diagram_from_doc({**doc, "order_cap": cap})
        else:
            init = gps_initial_diagram(S.model_from_doc(doc), cap)
        return S.diagram_to_doc(complete(init, cap))

    payload, _ = S.cached(cfg.cache_dir, S.input_hash(doc, cap), compute)
    return S.diagram_from_doc(payload), payload


def _mode_complete(cfg, doc):
    S.check_schema(doc)
    if doc["schema"] not in ("diagram/1", "toric-model/1"):
        raise ConfigError("complete expects a diagram/1 or toric-model/1 config")
    _, payload = _completed(cfg, doc, _cap(cfg, doc, 6))
    return S.dumps(payload)


def _model_and_diagram(cfg, doc, default_cap):
    if doc["schema"] == "dp5-params/1":
        from .dp5 import chamber_point, dp5_model

        params = S.dp5_params_from_doc(doc, cfg.t_numeric)
        model = dp5_model(params)
        chamber = cfg.chamber or doc.get("chamber", "central")
        stop = chamber_point(params, chamber)
        cap = _cap(cfg, doc, default_cap)
        mdoc = {**S.model_to_doc(model), "order_cap": cap}
        d, _ = _completed(cfg, mdoc, cap)
        return model, d, stop, cap
    S.check_schema(doc, "toric-model/1")
    cap = _cap(cfg, doc, default_cap)
    model = S.model_from_doc(doc)
    d, _ = _completed(cfg, doc, cap)
    return model, d, _stop(doc), cap


def _mode_theta(cfg, doc):
    from .broken import potential_labels, theta_lines

    S.check_schema(doc)
    model, d, stop, cap = _model_and_diagram(cfg, doc, 4)
    lines = theta_lines(d, stop, model, cap)
    return S.dumps(S.lines_to_doc(lines, potential_labels(d, model), stop))


def _mode_potential(cfg, doc):
    from .broken import potential

    S.check_schema(doc)
    model, d, stop, cap = _model_and_diagram(cfg, doc, 6)
    pot = potential(d, stop, model, cap)
    out = {"schema": "potential/1", "order_cap": cap, "potential": pot.as_data(), "text": pot.grouped_text().splitlines()}
    if doc["schema"] == "dp5-params/1":
        from .dp5 import limit_form

        lim = limit_form(pot)
        out["limit"] = lim.as_data()
        out["limit_text"] = lim.grouped_text().splitlines()
    return S.dumps(out)


def _mode_tropical(cfg, doc):
    from .lattice import Fan
    from .tropical import bulk_potential_via_chain, chain_fans, semifano_toric_potential

    S.check_schema(doc, "tropical-chain/1")
    try:
        fano = Fan(tuple(tuple(int(x) for x in v) for v in doc["fano_fan"]))
        chain = [(tuple(int(x) for x in w1), tuple(int(x) for x in w2)) for w1, w2 in doc["chain"]]
        points = [(S.q(p[0]), S.q(p[1])) for p in doc["points"]]
        stop = (S.q(doc["stop"][0]), S.q(doc["stop"][1])) if "stop" in doc else (0, 0)
    except (TypeError, ValueError, IndexError) as e:
        raise ConfigError(f"tropical-chain/1: malformed field ({e})") from None
    leaves = int(doc.get("max_leaves", 4))
    bulk = bulk_potential_via_chain(fano, chain, points, stop, leaves)
    final = chain_fans(fano, chain)[-1]
    formula = semifano_toric_potential(final)
    return S.dumps(
        {
            "schema": "tropical-report/1",
            "final_fan": [list(v) for v in final.rays],
            "bulk": bulk.as_data(),
            "semifano": formula.as_data(),
            "equal": bulk == formula,
        }
    )


def _mode_cluster(cfg, doc):
    from .cluster import cluster_initial_diagram

    data = S.fixed_data_from_doc(doc)
    rep = cluster_initial_diagram(data)
    return S.dumps(
        {
            "schema": "cluster-report/1",
            "gps": S.diagram_to_doc(rep.gps),
            "dual_x": S.diagram_to_doc(rep.dual_x),
            "equal": rep.equal,
            "note": rep.note,
        }
    )


def _mode_dp5(cfg, doc):
    from .dp5 import classify_valuations, critical_points, symbolic_checks, verify_nondegeneracy

    params = S.dp5_params_from_doc(doc, cfg.t_numeric)
    rep = critical_points(params)
    classify_valuations(rep, strict=False)
    nd = verify_nondegeneracy(rep)
    return S.dumps(
        {
            "schema": "dp5-report/1",
            "t_numeric": params.t_numeric,
            "geometric_count": rep.geometric_count,
            "points": [p.as_data() for p in rep.points],
            "nongeometric": [p.as_data() for p in rep.nongeometric],
            "nondegenerate": nd.passed,
            "min_relative_det": float(f"{nd.min_relative_det:.6e}"),
            "max_residual": float(f"{nd.max_residual:.3e}"),
            "critical_values_distinct": nd.values_distinct,
            "symbolic": symbolic_checks(),
        }
    )


def _mode_render(cfg, doc):
    from .svg import render_svg

    tag = S.check_schema(doc)
    if tag not in ("diagram/1", "broken-lines/1"):
        raise ConfigError("render expects a diagram/1 or broken-lines/1 artifact")
    return render_svg(doc, scale=cfg.svg_scale)


_DISPATCH = {
    "complete": _mode_complete,
    "theta": _mode_theta,
    "potential": _mode_potential,
    "tropical": _mode_tropical,
    "cluster": _mode_cluster,
    "dp5": _mode_dp5,
    "render": _mode_render,
}


def run(cfg: RunConfig) -> str:
    """Execute one mode and return the artifact text; also writes it when ``cfg.out`` is set."""
    doc = S.load(cfg.input)
    text = _DISPATCH[cfg.mode](cfg, doc)
    if cfg.out is not None:
        try:
            cfg.out.parent.mkdir(parents=True, exist_ok=True)
            cfg.out.write_text(text, encoding="utf-8")
        except OSError as e:
            raise ConfigError(f"cannot write {cfg.out}: {e.strerror}") from None
    return text


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="artifact", description="Scattering diagrams, broken lines and mirror potentials.")
    p.add_argument("mode", choices=MODES)
    p.add_argument("input", type=Path, help="schema-tagged JSON config or artifact")
    p.add_argument("--order", type=int, default=None, help="order cap (overrides the config)")
    p.add_argument("--out", type=Path, default=None, help="output file (default: stdout)")
    p.add_argument("--cache-dir", type=Path, default=None, help="directory for completed diagrams")
    p.add_argument("--t-numeric", type=float, default=None, help="numeric value of the Novikov parameter t")
    p.add_argument("--chamber", choices=("central", "up", "right"), default=None)
    p.add_argument("--svg-scale", type=float, default=40.0, help="pixels per lattice unit")
    return p


def main(argv: list[str] | None = None) -> int:
    ns = build_parser().parse_args(argv)
    try:
        cfg = RunConfig(
            ns.mode, ns.input, ns.order, ns.out, ns.cache_dir, ns.t_numeric, ns.chamber, ns.svg_scale
        )
        text = run(cfg)
    except ConfigError as e:
        print(f"config error: {e}", file=sys.stderr)
        return 2
    except ArtifactError as e:
        print(f"computation error: {type(e).__name__}: {e}", file=sys.stderr)
        return 3
    if cfg.out is None:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
