"""Desk-scale experiments, driven entirely through the CLI.

Trains the latent ODE on Spring(1), Spring(1,2), Spring(1,2,3) and
Spring(1,3), plus the LSTM autoencoder on Spring(1), then writes the RMSE,
timing, latent and reconstruction reports. Finished runs are reused, and an
interrupted run resumes from its last checkpoint, so the script can be
re-launched safely.

Settings (one core, about 35 min per model):
500 sequences, 2000 full-batch epochs, lr 0.001, one RK4 step per
observation interval, first 100 of 300 generated steps observed.

    python demos/desk_scale.py [--root DIR] [--only spring1,spring13]
"""
import argparse
import csv
import fcntl
import json
import os
import sys
from pathlib import Path

from latentode.cli import main as cli

ROOT = Path(os.environ.get("LATENTODE_DESK", Path(__file__).resolve().parents[1] / "desk_runs"))

DATASET = {"kind": "spring", "n": 500, "seed": 0, "seq_len": 300, "subsample": 100}
TRAIN = {"epochs": 2000, "batch_size": "full", "lr": 0.001, "seed": 0, "substeps": 1,
         "checkpoint_every": 50}

# experiment -> (spring mix, models trained)
EXPERIMENTS = {
    "spring1": ([1], ("node", "baseline")),
    "spring12": ([1, 2], ("node",)),
    "spring123": ([1, 2, 3], ("node",)),
    "spring13": ([1, 3], ("node",)),
}


def _call(*argv):
    code = cli([str(a) for a in argv])
    if code != 0:
        raise SystemExit(f"latentode {' '.join(map(str, argv))} exited with {code}")


def _logged_epochs(log_path):
    if not log_path.is_file():
        return 0
    with open(log_path, newline="") as fh:
        return sum(1 for _ in csv.reader(fh)) - 1


def ensure_dataset(root, name):
    mix, _ = EXPERIMENTS[name]
    wanted = {**DATASET, "mix": mix, "name": name}
    cfg_path = root / "data" / name / "config.json"
    if cfg_path.is_file() and json.loads(cfg_path.read_text())["dataset"] == wanted:
        return
    cfg = root / "configs" / f"data_{name}.json"
    cfg.parent.mkdir(parents=True, exist_ok=True)
    cfg.write_text(json.dumps({"dataset": wanted}, indent=2))
    _call("generate", "--config", cfg, "--out", root)


def ensure_run(root, name, kind):
    """Train (or finish training) one model; returns its run directory."""
    ensure_dataset(root, name)
    run_dir = root / "runs" / f"{name}_{kind}"
    train = {k: v for k, v in TRAIN.items() if kind == "node" or k != "substeps"}
    done = _logged_epochs(run_dir / "train_log.csv")
    ckpt = run_dir / "checkpoint.lode"
    if done >= TRAIN["epochs"]:
        return run_dir
    cfg = root / "configs" / f"train_{name}_{kind}.json"
    cfg.parent.mkdir(parents=True, exist_ok=True)
    if done and ckpt.is_file():
        from latentode.train import load_checkpoint
        reached = load_checkpoint(ckpt).epoch
        cfg.write_text(json.dumps({"train": {"checkpoint_every": TRAIN["checkpoint_every"]}}))
        _call("train", "--config", cfg, "--out", root, "--resume", ckpt,
              "--epochs", TRAIN["epochs"] - reached)
    else:
        cfg.write_text(json.dumps({"model": {"kind": kind}, "train": {**train, "data": name}},
                                  indent=2))
        _call("train", "--config", cfg, "--out", root)
    return run_dir


def ensure_all(root=ROOT, only=None):
    root.mkdir(parents=True, exist_ok=True)
    with open(root / ".lock", "w") as lock:
        try:
            fcntl.flock(lock, fcntl.LOCK_EX | fcntl.LOCK_NB)
        except BlockingIOError:
            raise SystemExit(f"another process is training into {root}") from None
        for name, (_, kinds) in EXPERIMENTS.items():
            if only and name not in only:
                continue
            for kind in kinds:
                ensure_run(root, name, kind)


def report(root=ROOT):
    _call("eval", "--out", root, "--experiments", "spring1", "--rmse", "--reconstruct",
          "--extrapolate", "-0.5,1.5")
    _call("eval", "--out", root, "--experiments", ",".join(EXPERIMENTS), "--timing")
    _call("eval", "--out", root, "--experiments", "spring13,spring123", "--latent")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    ap.add_argument("--root", type=Path, default=ROOT)
    ap.add_argument("--only", help="comma-separated experiment names")
    ap.add_argument("--no-report", action="store_true")
    a = ap.parse_args()
    ensure_all(a.root, a.only.split(",") if a.only else None)
    if not a.no_report:
        report(a.root)
    sys.exit(0)
