"""Command-line front end.

Subcommands:
    run       benchmark a dataset directory, write a CSV report
    synth     materialize a synthetic dataset as a PGM tree
    edt-dump  binarize one image at one threshold, write the rescaled
              distance map as a PGM for visual inspection
    selftest  run the built-in oracle/invariant battery

`run` with only the required flags reproduces the default protocol:
thresholds 1..150, 10-fold cross-validation, seed 42, combined mode.
"""

import argparse
import sys

from .harness import (
    DEFAULT_SYNTH_CLASSES,
    EXTRA_SYNTH_CLASSES,
    SweepConfig,
    SynthSpec,
    generate_synthetic,
    run_sweep,
    write_curve,
    write_report,
)
from .image_io import load_dataset, load_image, save_dataset, write_pgm
from .transform import binarize, edt_exact, quantize_distance

_MODE_FLAGS = {"baseline": "baseline", "edt-only": "edt_only", "combined": "combined"}


def build_parser():
    parser = argparse.ArgumentParser(
        prog="edtexture",
        description="Texture classification benchmark with distance-transform preprocessing.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="benchmark a dataset and write a CSV report")
    run.add_argument("--dataset", required=True, help="root directory: one subdirectory per class")
    run.add_argument("--out", required=True, help="output CSV path")
    run.add_argument(
        "--descriptor",
        required=True,
        choices=["lbp", "lbpv", "glcm", "gldm", "fourier", "gabor"],
    )
    run.add_argument("--classifier", required=True, choices=["knn", "nb"])
    run.add_argument("--mode", default="combined", choices=sorted(_MODE_FLAGS))
    run.add_argument("--i-min", type=int, default=1)
    run.add_argument("--i-max", type=int, default=150)
    run.add_argument("--folds", type=int, default=10)
    run.add_argument("--seed", type=int, default=42)
    run.add_argument("--glcm-levels", type=int, default=32)
    run.add_argument("--gabor-kernel", type=int, default=31, help="odd kernel side, >= 11")
    run.add_argument("--threads", type=int, default=1)
    run.add_argument("--curve", default=None, help="also write iteration,acc_mean pairs here")

    synth = sub.add_parser("synth", help="write a synthetic dataset as a PGM tree")
    synth.add_argument("--out", required=True, help="dataset root to create")
    synth.add_argument("--classes", type=int, default=4, help="2..8 texture classes")
    synth.add_argument("--per-class", type=int, default=40)
    synth.add_argument("--size", type=int, default=64)
    synth.add_argument("--seed", type=int, default=42)

    dump = sub.add_parser("edt-dump", help="write one distance map as a PGM")
    dump.add_argument("--image", required=True)
    dump.add_argument("--threshold", type=int, required=True)
    dump.add_argument("--out", required=True)

    self_p = sub.add_parser("selftest", help="run the built-in verification battery")
    self_p.add_argument("--seed", type=int, default=20240901)
    return parser


def parse_args(argv):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "run":
        if args.folds < 2:
            parser.error("folds must be >= 2")
        if not 0 <= args.i_min <= args.i_max <= 255:
            parser.error("need 0 <= i-min <= i-max <= 255")
        if args.threads < 1:
            parser.error("threads must be >= 1")
        if args.gabor_kernel < 11 or args.gabor_kernel % 2 == 0:
            parser.error("gabor-kernel must be odd and >= 11")
        if not 1 <= args.glcm_levels <= 256:
            parser.error("glcm-levels must be in [1, 256]")
    elif args.command == "synth":
        if not 2 <= args.classes <= 8:
            parser.error("classes must be in [2, 8]")
        if args.per_class < 2:
            parser.error("per-class must be >= 2")
        if args.size < 8:
            parser.error("size must be >= 8")
    elif args.command == "edt-dump":
        if not 0 <= args.threshold <= 255:
            parser.error("threshold must be in [0, 255]")
    return args


def _cmd_run(args):
    dataset = load_dataset(args.dataset)
    config = SweepConfig(
        descriptor=args.descriptor,
        classifier=args.classifier,
        mode=_MODE_FLAGS[args.mode],
        i_min=args.i_min,
        i_max=args.i_max,
        folds=args.folds,
        seed=args.seed,
        glcm_levels=args.glcm_levels,
        gabor_kernel_side=args.gabor_kernel,
        threads=args.threads,
    )
    result = run_sweep(dataset, config)
    write_report(result, args.out)
    if args.curve:
        write_curve(result, args.curve)
    if result.best_i is None:
        print(f"baseline: {result.baseline.mean * 100:.2f}% -> {args.out}")
    else:
        best = result.best_report()
        print(
            f"baseline {result.baseline.mean * 100:.2f}%, "
            f"best i={result.best_i} at {best.mean * 100:.2f}% -> {args.out}"
        )
    return 0


def _cmd_synth(args):
    kinds = (DEFAULT_SYNTH_CLASSES + EXTRA_SYNTH_CLASSES)[: args.classes]
    spec = SynthSpec(classes=kinds, per_class=args.per_class, size=args.size, seed=args.seed)
    dataset = generate_synthetic(spec)
    save_dataset(dataset, args.out)
    print(f"wrote {len(dataset)} images in {len(dataset.class_names)} classes -> {args.out}")
    return 0


def _cmd_edt_dump(args):
    img = load_image(args.image)
    dm = edt_exact(binarize(img, args.threshold))
    write_pgm(quantize_distance(dm), args.out)
    note = " (empty foreground)" if dm.foreground_empty else ""
    print(f"distance map of {args.image} at i={args.threshold}{note} -> {args.out}")
    return 0


def main(argv=None):
    """Entry point; returns a process exit status."""
    args = parse_args(sys.argv[1:] if argv is None else argv)
    try:
        if args.command == "run":
            return _cmd_run(args)
        if args.command == "synth":
            return _cmd_synth(args)
        if args.command == "edt-dump":
            return _cmd_edt_dump(args)
        if args.command == "selftest":
            from .selftest import run_selftest

            return run_selftest(seed=args.seed)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    raise AssertionError(f"unhandled command {args.command}")


def entrypoint():
    raise SystemExit(main())


if __name__ == "__main__":
    entrypoint()
