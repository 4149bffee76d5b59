"""Batch command line: compare, calibrate, evaluate, synth.

Data goes to stdout or the requested output files; diagnostics go to
stderr. Exit codes: 0 success, 1 validation error, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import sys
from pathlib import Path

from .calibration import CalibrationSample, CalibrationState
from .fileio import (
    CalibratedModel,
    atomic_write_text,
    dump_json,
    load_face,
    load_manifest,
    load_model,
    save_face,
    save_manifest,
    save_model,
)
from .fuzzymath import DEFAULT_KERNELS
from .scoring import MatchReport, ScoringConfig, compare
from .silhouette import AlphaMode
from .synthbench import PopulationConfig, generate_population, report_from_scores


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fuzzyface",
        description="Face similarity scoring from landmark files.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_scoring_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--alpha-mode",
            choices=[m.value for m in AlphaMode],
            default=None,
            help="overlap score mode (default: complement, or the model's)",
        )
        p.add_argument(
            "--kernel",
            choices=sorted(DEFAULT_KERNELS),
            default=None,
            help="membership kernel (default: bell, or the model's)",
        )
        p.add_argument(
            "--raster",
            type=int,
            metavar="N",
            default=None,
            help="raster resolution multiplier (default: sized to the canvas)",
        )

    p_compare = sub.add_parser("compare", help="score two face files")
    p_compare.add_argument("a", help="first face file")
    p_compare.add_argument("b", help="second face file")
    group = p_compare.add_mutually_exclusive_group()
    group.add_argument("--k", type=float, default=None, help="mixing weight in [0, 1] (default 0.5)")
    group.add_argument("--model", default=None, help="calibrated model file supplying k")
    add_scoring_flags(p_compare)
    fmt = p_compare.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="print the report as JSON (default)")
    fmt.add_argument("--text", action="store_true", help="print the report as a table")
    p_compare.set_defaults(func=_cmd_compare)

    p_cal = sub.add_parser("calibrate", help="train the mixing weight from genuine pairs")
    p_cal.add_argument("manifest", help="pair manifest; genuine pairs are used in order")
    p_cal.add_argument("-o", "--output", required=True, help="model file to write")
    add_scoring_flags(p_cal)
    p_cal.set_defaults(func=_cmd_calibrate)

    p_eval = sub.add_parser("evaluate", help="score a labeled manifest against a model")
    p_eval.add_argument("manifest", help="pair manifest with genuine and impostor labels")
    p_eval.add_argument("--model", required=True, help="calibrated model file")
    p_eval.add_argument("--threshold", type=float, required=True, help="accept threshold in [0, 100]")
    p_eval.add_argument("-o", "--output", required=True, help="report file to write")
    p_eval.add_argument("--csv", default=None, help="also write per-pair scores as CSV")
    p_eval.add_argument(
        "--raster",
        type=int,
        metavar="N",
        default=None,
        help="raster resolution multiplier (default: sized to the canvas)",
    )
    p_eval.set_defaults(func=_cmd_evaluate)

    p_synth = sub.add_parser("synth", help="write a synthetic population and manifest")
    p_synth.add_argument("--identities", type=int, required=True)
    p_synth.add_argument("--captures", type=int, required=True)
    p_synth.add_argument("--seed", type=int, required=True)
    p_synth.add_argument("--identity-sigma", type=float, default=6.0)
    p_synth.add_argument("--capture-sigma", type=float, default=1.0)
    p_synth.add_argument("--outline-sigma", type=float, default=2.0)
    p_synth.add_argument("-o", "--output", required=True, help="directory to write")
    p_synth.set_defaults(func=_cmd_synth)

    return parser


def _config_from_args(args, model: CalibratedModel | None) -> ScoringConfig:
    if model is not None:
        k = model.k
        alpha_mode = AlphaMode(args.alpha_mode) if args.alpha_mode else model.alpha_mode
        kernel = DEFAULT_KERNELS[args.kernel] if args.kernel else model.kernel
    else:
        k = args.k if getattr(args, "k", None) is not None else 0.5
        alpha_mode = AlphaMode(args.alpha_mode) if args.alpha_mode else AlphaMode.COMPLEMENT
        kernel = DEFAULT_KERNELS[args.kernel] if args.kernel else DEFAULT_KERNELS["bell"]
    return ScoringConfig(k=k, alpha_mode=alpha_mode, kernel=kernel, resolution_scale=args.raster)


def _report_text(report: MatchReport) -> str:
    lines = [f"a: {report.a_id}    b: {report.b_id}"]
    lines.append(f"{'feature':<18}{'a':>12}{'b':>12}{'entropy':>12}{'membership':>12}")
    for row in report.features:
        lines.append(
            f"{row.name:<18}{row.a:>12.4f}{row.b:>12.4f}{row.entropy:>12.6f}{row.membership:>12.6f}"
        )
    lines.append(
        f"feature_score {report.feature_score:.6f}   alpha {report.alpha:.6f} "
        f"({report.alpha_mode.value})   k {report.k:.6f}"
    )
    lines.append(f"similarity {report.similarity:.4f}")
    return "\n".join(lines) + "\n"


def _cmd_compare(args) -> int:
    model = load_model(args.model) if args.model else None
    config = _config_from_args(args, model)
    report = compare(load_face(args.a), load_face(args.b), config)
    if args.text:
        sys.stdout.write(_report_text(report))
    else:
        sys.stdout.write(dump_json(report.to_dict()))
    return 0


def _cmd_calibrate(args) -> int:
    pairs = load_manifest(args.manifest)
    genuine = [p for p in pairs if p.label == "genuine"]
    ignored = len(pairs) - len(genuine)
    if ignored:
        print(
            f"warning: ignoring {ignored} impostor pair(s); calibration uses genuine pairs only",
            file=sys.stderr,
        )
    if not genuine:
        raise ValueError(f"{args.manifest}: no genuine pairs to calibrate from")
    config = _config_from_args(args, None)
    state = CalibrationState()
    for pair in genuine:  # manifest order matters: updates are order-dependent
        report = compare(load_face(pair.a), load_face(pair.b), config)
        state.update(CalibrationSample(report.feature_score, report.alpha))
    if not state.initialized:
        raise ValueError("every genuine pair was degenerate; cannot calibrate")
    if state.skipped:
        print(f"warning: skipped {state.skipped} degenerate sample(s)", file=sys.stderr)
    model = CalibratedModel.from_state(state, config.alpha_mode, config.kernel)
    save_model(model, args.output)
    print(f"calibrated k={model.k:.6f} from {model.n} pair(s) -> {args.output}", file=sys.stderr)
    return 0


def _cmd_evaluate(args) -> int:
    pairs = load_manifest(args.manifest)
    model = load_model(args.model)
    config = ScoringConfig(
        k=model.k,
        alpha_mode=model.alpha_mode,
        kernel=model.kernel,
        resolution_scale=args.raster,
    )
    scored = []
    for pair in pairs:
        report = compare(load_face(pair.a), load_face(pair.b), config)
        scored.append((pair.a.name, pair.b.name, pair.label, report.similarity))
    genuine = [s for _, _, label, s in scored if label == "genuine"]
    impostor = [s for _, _, label, s in scored if label == "impostor"]
    report = report_from_scores(genuine, impostor, args.threshold)
    atomic_write_text(args.output, dump_json(report.to_dict()))
    if args.csv:
        _write_scores_csv(scored, args.csv)
    print(
        f"evaluated {len(scored)} pair(s): auc={report.auc:.4f} "
        f"accuracy@{args.threshold:g}={report.accuracy_at_threshold:.4f} -> {args.output}",
        file=sys.stderr,
    )
    return 0


def _write_scores_csv(scored, path) -> None:
    with open(path, "w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(["a", "b", "label", "similarity"])
        for a, b, label, similarity in scored:
            writer.writerow([a, b, label, repr(similarity)])


def _cmd_synth(args) -> int:
    config = PopulationConfig(
        identity_count=args.identities,
        captures_per_identity=args.captures,
        identity_sigma=args.identity_sigma,
        capture_sigma=args.capture_sigma,
        outline_sigma=args.outline_sigma,
        seed=args.seed,
    )
    population = generate_population(config)
    outdir = Path(args.output)
    outdir.mkdir(parents=True, exist_ok=True)
    for labeled in population:
        save_face(labeled.face, outdir / f"{labeled.face.id}.json")
    entries = []
    for i in range(len(population)):
        for j in range(i + 1, len(population)):
            a, b = population[i], population[j]
            label = "genuine" if a.identity == b.identity else "impostor"
            entries.append((f"{a.face.id}.json", f"{b.face.id}.json", label))
    save_manifest(entries, outdir / "manifest.json")
    print(
        f"wrote {len(population)} face(s) and {len(entries)} pair(s) to {outdir}",
        file=sys.stderr,
    )
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
