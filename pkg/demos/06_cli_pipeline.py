"""The command-line workflow end to end on a tiny problem.

Equivalent shell session:

    latentode generate --kind spring --mix 1,3 --n 60 --subsample 60
    latentode train --model node --data spring13 --epochs 20 --substeps 1
    latentode train --model baseline --data spring13 --epochs 20
    latentode eval --experiments spring13 --rmse --latent --reconstruct --timing
"""
import sys
import tempfile
from pathlib import Path

from latentode.cli import main

out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(tempfile.mkdtemp())
steps = [
    ["generate", "--kind", "spring", "--mix", "1,3", "--n", "60", "--subsample", "60"],
    ["train", "--model", "node", "--data", "spring13", "--epochs", "20", "--substeps", "1"],
    ["train", "--model", "baseline", "--data", "spring13", "--epochs", "20"],
    ["eval", "--experiments", "spring13", "--rmse", "--latent", "--reconstruct", "--timing"],
]
for argv in steps:
    print("$ latentode", " ".join(argv))
    code = main(argv + ["--out", str(out)])
    if code:
        sys.exit(code)
print("\noutputs:")
for p in sorted(out.rglob("*")):
    if p.is_file():
        print(" ", p.relative_to(out))
