"""Command-line front end: parameter sweeps to CSV, vanishing-point scans,
superoperator and Kraus dumps, Haar sampling, and the acceptance-criteria
validation suite.

Grids are given as ``start:stop:steps`` (inclusive endpoints) or a single
value; every command is deterministic given its flags and seed.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .states import InitialState, build_cluster
from .channels import ChannelKind, decohered_cluster
from .entanglement import negativity, esd_threshold, witness_expectation
from .logical import (
    RotationSpec,
    closed_form_superoperator,
    cluster_fidelity,
    gate_fidelity,
    haar_random_rotation,
    ideal_superoperator,
    reconstruct_superoperator,
    target_unitary,
)
from .choi import (
    choi_from_superoperator,
    first_kraus_correlation,
    first_kraus_fidelity,
    kraus_from_choi,
)

CSV_HEADER = "channel,p,alpha,beta,theta1,theta2,theta3,metric,value"

METRICS = ("negativity", "witness", "cluster_fidelity", "gate_fidelity", "kraus_amplitudes", "f1", "c1")

#: Per-metric default grids (start, stop, steps); None means the axis is a
#: single fixed value.  The state-metric defaults sweep (alpha, p); the
#: rotation-metric defaults sweep p at a fixed reference rotation, with a
#: theta2 surface for the gate fidelity.
_STATE_DEFAULTS = {
    "p": (0.0, 1.0, 101),
    "alpha": (0.0, np.pi, 41),
    "beta": 0.0,
    "theta1": 0.0,
    "theta2": 0.0,
    "theta3": 0.0,
}
_GATE_DEFAULTS = {
    "p": (0.0, 1.0, 101),
    "alpha": np.pi / 4,
    "beta": 0.0,
    "theta1": 0.0,
    "theta2": (0.0, 2.0 * np.pi, 41),
    "theta3": 0.0,
}
_KRAUS_DEFAULTS = {
    "p": (0.0, 1.0, 101),
    "alpha": np.pi / 4,
    "beta": 0.0,
    "theta1": 0.7,
    "theta2": np.pi / 2,
    "theta3": 0.4,
}
DEFAULT_GRIDS = {
    "negativity": _STATE_DEFAULTS,
    "witness": _STATE_DEFAULTS,
    "cluster_fidelity": _STATE_DEFAULTS,
    "gate_fidelity": _GATE_DEFAULTS,
    "kraus_amplitudes": _KRAUS_DEFAULTS,
    "f1": _KRAUS_DEFAULTS,
    "c1": _KRAUS_DEFAULTS,
}


def _fmt(x: float) -> str:
    return f"{float(x):.12g}"


def parse_grid(text: str) -> np.ndarray:
    parts = str(text).split(":")
    if len(parts) == 1:
        return np.array([float(parts[0])])
    if len(parts) == 3:
        start, stop, steps = float(parts[0]), float(parts[1]), int(parts[2])
        if steps < 1:
            raise ValueError(f"grid needs at least one step: {text!r}")
        return np.linspace(start, stop, steps)
    raise ValueError(f"grid must be a value or start:stop:steps, got {text!r}")


def parse_subset(text: str) -> tuple[int, ...]:
    try:
        qubits = tuple(sorted({int(tok) for tok in str(text).split(",") if tok.strip()}))
    except ValueError:
        raise ValueError(f"subset must be comma-separated qubit indices, got {text!r}") from None
    if not qubits:
        raise ValueError("subset must be nonempty")
    return qubits


@dataclass(frozen=True)
class SweepConfig:
    channel: ChannelKind
    metric: str
    subset: tuple[int, ...]
    p: np.ndarray
    alpha: np.ndarray
    beta: np.ndarray
    theta1: np.ndarray
    theta2: np.ndarray
    theta3: np.ndarray
    seed: int = 0
    jobs: int = 1
    out: str | None = None
    fmt: str = "csv"

    def points(self):
        for p in self.p:
            for alpha in self.alpha:
                for beta in self.beta:
                    for t1 in self.theta1:
                        for t2 in self.theta2:
                            for t3 in self.theta3:
                                yield (float(p), float(alpha), float(beta),
                                       float(t1), float(t2), float(t3))


def _evaluate_point(args) -> list[tuple]:
    kind_value, metric, subset, point = args
    kind = ChannelKind(kind_value)
    p, alpha, beta, t1, t2, t3 = point
    rows = []
    if metric == "negativity":
        rho = decohered_cluster(InitialState(alpha, beta), kind, p)
        rows.append((point, metric, negativity(rho, subset).value))
    elif metric == "witness":
        rho = decohered_cluster(InitialState(alpha, 0.0), kind, p)
        rows.append((point, metric, witness_expectation(rho, beta)))
    elif metric == "cluster_fidelity":
        state = InitialState(alpha, beta)
        rows.append((point, metric,
                     cluster_fidelity(build_cluster(state), decohered_cluster(state, kind, p))))
    elif metric == "gate_fidelity":
        rotation = RotationSpec(t1, t2, t3)
        rows.append((point, metric,
                     gate_fidelity(ideal_superoperator(rotation),
                                   reconstruct_superoperator(kind, p, rotation))))
    elif metric in ("kraus_amplitudes", "f1", "c1"):
        rotation = RotationSpec(t1, t2, t3)
        superop = reconstruct_superoperator(kind, p, rotation)
        unitary = target_unitary(rotation)
        decomposition = kraus_from_choi(choi_from_superoperator(superop), unitary)
        if metric == "kraus_amplitudes":
            for idx, amp in enumerate(decomposition.amplitudes, start=1):
                rows.append((point, f"kraus_amp{idx}", float(amp)))
        elif metric == "f1":
            rows.append((point, metric, first_kraus_fidelity(decomposition, unitary)))
        else:
            rows.append((point, metric, first_kraus_correlation(decomposition, unitary)))
    else:
        raise ValueError(f"unknown metric {metric!r}")
    return rows


def run_sweep(config: SweepConfig) -> list[str]:
    """Evaluate the grid and return CSV lines (header first), in grid order."""
    tasks = [(config.channel.value, config.metric, config.subset, point)
             for point in config.points()]
    if config.jobs > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            per_point = list(pool.map(_evaluate_point, tasks, chunksize=16))
    else:
        per_point = [_evaluate_point(task) for task in tasks]
    lines = [CSV_HEADER]
    for rows in per_point:
        for point, metric, value in rows:
            p, alpha, beta, t1, t2, t3 = point
            lines.append(",".join([
                config.channel.value, _fmt(p), _fmt(alpha), _fmt(beta),
                _fmt(t1), _fmt(t2), _fmt(t3), metric, _fmt(value),
            ]))
    return lines


def _axis(args, config_file, name, defaults):
    override = getattr(args, name, None)
    if override is not None:
        return parse_grid(override)
    if name in config_file:
        return parse_grid(str(config_file[name]))
    default = defaults[name]
    if isinstance(default, tuple):
        return np.linspace(*default[:2], default[2])
    return np.array([default])


def _build_sweep_config(args) -> SweepConfig:
    config_file = {}
    if args.config:
        with open(args.config, "r", encoding="utf-8") as handle:
            config_file = json.load(handle)
    channel = ChannelKind.parse(args.channel or config_file.get("channel", ""))
    metric = args.metric or config_file.get("metric", "")
    if metric not in METRICS:
        raise ValueError(f"unknown metric {metric!r}; expected one of {METRICS}")
    subset = parse_subset(args.subset or config_file.get("subset", "1"))
    defaults = DEFAULT_GRIDS[metric]
    axes = {name: _axis(args, config_file, name, defaults)
            for name in ("p", "alpha", "beta", "theta1", "theta2", "theta3")}
    if axes["p"].min() < 0 or axes["p"].max() > 1:
        raise ValueError("p grid must lie within [0, 1]")
    return SweepConfig(
        channel=channel,
        metric=metric,
        subset=subset,
        seed=int(args.seed if args.seed is not None else config_file.get("seed", 0)),
        jobs=int(args.jobs if args.jobs is not None else config_file.get("jobs", 1)),
        out=args.out or config_file.get("out"),
        fmt=args.format or config_file.get("format", "csv"),
        **axes,
    )


def _write_output(lines: list[str], config: SweepConfig) -> None:
    if config.fmt == "json":
        header = lines[0].split(",")
        rows = []
        for line in lines[1:]:
            cells = line.split(",")
            row = dict(zip(header, cells))
            for key in ("p", "alpha", "beta", "theta1", "theta2", "theta3", "value"):
                row[key] = float(row[key])
            rows.append(row)
        text = json.dumps(rows, indent=2) + "\n"
    else:
        text = "\n".join(lines) + "\n"
    if config.out:
        with open(config.out, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def cmd_sweep(args) -> int:
    config = _build_sweep_config(args)
    _write_output(run_sweep(config), config)
    return 0


def cmd_esd(args) -> int:
    kind = ChannelKind.parse(args.channel)
    subset = parse_subset(args.subset)
    state = InitialState(float(args.alpha), float(args.beta))
    try:
        threshold = esd_threshold(kind, subset, state, tol=float(args.tol))
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if threshold is None:
        print("no-esd")
    else:
        print(f"esd p={_fmt(threshold)}")
    return 0


def cmd_superop(args) -> int:
    kind = ChannelKind.parse(args.channel)
    rotation = RotationSpec(float(args.theta1), float(args.theta2), float(args.theta3))
    p = float(args.p)
    payload = {}
    if args.source in ("reconstructed", "both"):
        payload["reconstructed"] = reconstruct_superoperator(kind, p, rotation).to_dict()
    if args.source in ("closed-form", "both"):
        closed = closed_form_superoperator(kind, p, rotation, typo_corrected=not args.verbatim_transcription)
        entry = closed.to_dict()
        entry["transcription"] = "verbatim" if args.verbatim_transcription else "corrected"
        payload["closed_form"] = entry
    if args.source == "both":
        rec = reconstruct_superoperator(kind, p, rotation).matrix
        corrected = closed_form_superoperator(kind, p, rotation, typo_corrected=True).matrix
        verbatim = closed_form_superoperator(kind, p, rotation, typo_corrected=False).matrix
        payload["max_residual_corrected"] = float(np.abs(rec - corrected).max())
        payload["max_residual_verbatim"] = float(np.abs(rec - verbatim).max())
    print(json.dumps(payload, indent=2))
    return 0


def cmd_kraus(args) -> int:
    kind = ChannelKind.parse(args.channel)
    rotation = RotationSpec(float(args.theta1), float(args.theta2), float(args.theta3))
    superop = reconstruct_superoperator(kind, float(args.p), rotation)
    unitary = target_unitary(rotation)
    decomposition = kraus_from_choi(choi_from_superoperator(superop), unitary)
    payload = decomposition.to_dict()
    payload["channel"] = kind.value
    payload["p"] = float(args.p)
    payload["theta"] = list(rotation.angles)
    payload["f1"] = first_kraus_fidelity(decomposition, unitary)
    payload["c1"] = first_kraus_correlation(decomposition, unitary)
    print(json.dumps(payload, indent=2))
    return 0


def cmd_validate(args) -> int:
    from .validation import render_report, run_all

    report, code = render_report(run_all())
    print(report)
    return code


def cmd_haar_sample(args) -> int:
    rng = np.random.default_rng(int(args.seed))
    for _ in range(int(args.count)):
        rotation = haar_random_rotation(rng)
        print(",".join(_fmt(v) for v in rotation.angles))
    return 0


def _add_rotation_flags(parser):
    parser.add_argument("--theta1", default=0.0)
    parser.add_argument("--theta2", default=0.0)
    parser.add_argument("--theta3", default=0.0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="noisy-cluster",
        description="Four-qubit cluster-state decoherence simulator",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sweep = sub.add_parser("sweep", help="evaluate a metric over a parameter grid")
    sweep.add_argument("--channel")
    sweep.add_argument("--metric")
    sweep.add_argument("--subset")
    for axis in ("p", "alpha", "beta", "theta1", "theta2", "theta3"):
        sweep.add_argument(f"--{axis}", help="value or start:stop:steps")
    sweep.add_argument("--seed", type=int)
    sweep.add_argument("--jobs", type=int)
    sweep.add_argument("--out")
    sweep.add_argument("--format", choices=("csv", "json"))
    sweep.add_argument("--config", help="JSON config file; flags override its values")
    sweep.set_defaults(func=cmd_sweep)

    esd = sub.add_parser("esd", help="locate the noise strength where a negativity dies")
    esd.add_argument("--channel", required=True)
    esd.add_argument("--subset", required=True)
    esd.add_argument("--alpha", required=True, type=float)
    esd.add_argument("--beta", default=0.0, type=float)
    esd.add_argument("--tol", default=1e-4, type=float)
    esd.set_defaults(func=cmd_esd)

    superop = sub.add_parser("superop", help="dump a logical-rotation superoperator")
    superop.add_argument("--channel", required=True)
    superop.add_argument("--p", required=True, type=float)
    _add_rotation_flags(superop)
    superop.add_argument("--source", choices=("reconstructed", "closed-form", "both"),
                         default="reconstructed")
    superop.add_argument("--verbatim-transcription", action="store_true",
                         help="emit the closed form verbatim instead of Hermiticity-corrected")
    superop.set_defaults(func=cmd_superop)

    kraus = sub.add_parser("kraus", help="dump the ranked Kraus decomposition")
    kraus.add_argument("--channel", required=True)
    kraus.add_argument("--p", required=True, type=float)
    _add_rotation_flags(kraus)
    kraus.set_defaults(func=cmd_kraus)

    validate = sub.add_parser("validate", help="run the acceptance-criteria suite")
    validate.set_defaults(func=cmd_validate)

    haar = sub.add_parser("haar-sample", help="sample rotations from the invariant measure")
    haar.add_argument("--count", default=10, type=int)
    haar.add_argument("--seed", default=0, type=int)
    haar.set_defaults(func=cmd_haar_sample)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
